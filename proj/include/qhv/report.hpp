#pragma once

#include <string>

#include <json.hpp> // vendored nlohmann/json single header

#include "qhv/errors.hpp"
#include "qhv/verify.hpp"

namespace qhv {

/// JSON report.  nlohmann::json stores object keys in a std::map, so key
/// ordering is sorted and bit-stable across runs; every rational rides as an
/// exact "num/den" string.
inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json j;
    nlohmann::json cfg;
    cfg["ids"] = rep.config.identityIds;
    cfg["n_max"] = rep.config.nMax;
    cfg["ell_max"] = rep.config.ellMax;
    cfg["points_per_cell"] = rep.config.pointsPerCell;
    cfg["seed"] = rep.config.seed;
    cfg["bound"] = rep.config.numeratorBound;
    cfg["max_resample_attempts"] = rep.config.maxResampleAttempts;
    j["config"] = cfg;
    j["status"] = rep.status;
    j["results"] = nlohmann::json::array();
    for (const auto& r : rep.results) {
        nlohmann::json e;
        e["id"] = r.id;
        e["cells"] = r.cells;
        e["points"] = r.points;
        e["failures"] = r.failures;
        j["results"].push_back(e);
    }
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : rep.witnesses) {
        nlohmann::json e;
        e["id"] = w.id;
        e["n"] = w.n;
        e["ell"] = w.ell;
        e["t"] = w.t;
        e["c"] = w.c;
        e["lhs"] = w.lhs;
        e["rhs"] = w.rhs;
        j["witnesses"].push_back(e);
    }
    j["resamples"] = rep.resamples;
    j["degree_note"] = rep.degreeNote;
    j["elapsed_ms"] = rep.elapsedMs;
    return j;
}

inline std::string report_to_markdown(const VerificationReport& rep) {
    std::string md = "# Identity verification report\n\n";
    md += "- status: **" + rep.status + "**\n";
    md += "- seed: " + std::to_string(rep.config.seed) +
          ", n-max: " + std::to_string(rep.config.nMax) +
          ", ell-max: " + std::to_string(rep.config.ellMax) +
          ", points/cell: " + std::to_string(rep.config.pointsPerCell) +
          ", bound: " + std::to_string(rep.config.numeratorBound) + "\n";
    md += "- resamples: " + std::to_string(rep.resamples) + "\n";
    md += "- elapsed: " + std::to_string(rep.elapsedMs) + " ms\n\n";
    md += "| identity | cells | points/cell | failures |\n";
    md += "|---|---:|---:|---:|\n";
    for (const auto& r : rep.results)
        md += "| " + r.id + " | " + std::to_string(r.cells) + " | " + std::to_string(r.points) +
              " | " + std::to_string(r.failures) + " |\n";
    if (!rep.witnesses.empty()) {
        md += "\n## Failure witnesses\n\n";
        md += "| identity | n | ell | t | c | lhs | rhs |\n";
        md += "|---|---:|---:|---|---|---|---|\n";
        for (const auto& w : rep.witnesses)
            md += "| " + w.id + " | " + std::to_string(w.n) + " | " + std::to_string(w.ell) +
                  " | " + w.t + " | " + w.c + " | " + w.lhs + " | " + w.rhs + " |\n";
    }
    md += "\n" + rep.degreeNote + "\n";
    return md;
}

/// Serialize for the wire: two-space-indented JSON or the markdown summary.
inline std::string emit_report(const VerificationReport& rep, const std::string& format) {
    if (format == "json") return report_to_json(rep).dump(2) + "\n";
    if (format == "markdown" || format == "md") return report_to_markdown(rep);
    throw Error("emit_report: unknown format '" + format + "' (expected json or markdown)");
}

} // namespace qhv
