// qhv: exact-arithmetic verifier for a catalog of terminating q-series and
// classical hypergeometric identities.  Every check is an exact rational
// comparison; there are no tolerances anywhere.
//
// Exit codes: 0 all checks pass, 1 at least one failure witness, 2 usage or
// configuration error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp> // vendored

#include "qhv/catalog.hpp"
#include "qhv/lemmas.hpp"
#include "qhv/report.hpp"
#include "qhv/sampling.hpp"
#include "qhv/verify.hpp"

namespace {

/// Accept the typographic script-l as an alias in identity ids
/// (ex-thm-a-ℓ1 and ex-thm-a-l1 name the same identity).
std::string normalize_id(std::string id) {
    const std::string scriptL = "\xE2\x84\x93"; // UTF-8 for U+2113
    for (auto pos = id.find(scriptL); pos != std::string::npos; pos = id.find(scriptL))
        id.replace(pos, scriptL.size(), "l");
    return id;
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(normalize_id(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(normalize_id(cur));
    return out;
}

std::uint64_t seed_with_env_override(std::uint64_t cliSeed) {
    if (const char* env = std::getenv("QHV_SEED")) {
        try {
            size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing junk");
            return static_cast<std::uint64_t>(v);
        } catch (const std::exception&) {
            throw qhv::Error(std::string("QHV_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return cliSeed;
}

void write_text(const std::string& text, const std::string& outPath) {
    if (outPath.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw qhv::Error("cannot open output file '" + outPath + "'");
    out << text;
}

int run_verify(const std::string& idsCsv, qhv::VerificationConfig cfg, const std::string& format,
               const std::string& outPath, bool corrupt) {
    cfg.identityIds = split_ids(idsCsv);
    cfg.seed = seed_with_env_override(cfg.seed);
    cfg.outputFormat = (format == "md") ? "markdown" : format;
    const qhv::VerificationReport report = qhv::run_verification(
        cfg, corrupt ? qhv::Corruption::scale_rhs : qhv::Corruption::none);
    write_text(qhv::emit_report(report, cfg.outputFormat), outPath);
    return report.status == "pass" ? 0 : 1;
}

int run_eval(const std::string& rawId, int n, int ell, const std::string& tStr,
             const std::string& cStr) {
    const qhv::IdentityDescriptor& d = qhv::catalog_find(normalize_id(rawId));
    const int effEll = d.takesEll ? ell : d.fixedEll;
    qhv::EvalPoint point;
    if (d.family == qhv::Family::qside) {
        if (tStr.empty() || cStr.empty())
            throw qhv::Error("identity '" + d.id + "' needs both --t and --c");
        point = qhv::make_sample_point(qhv::rat_from_string(tStr), qhv::rat_from_string(cStr));
    } else {
        if (cStr.empty())
            throw qhv::Error("identity '" + d.id + "' takes its rational parameter via --c");
        point = qhv::rat_from_string(cStr);
    }
    const qhv::Rat lhs = d.lhs(n, effEll, point);
    const qhv::Rat rhs = d.rhs(n, effEll, point);
    std::cout << "id    = " << d.id << "\n";
    std::cout << "n     = " << n << ", ell = " << effEll << "\n";
    std::cout << "lhs   = " << qhv::rat_to_string(lhs) << "\n";
    std::cout << "rhs   = " << qhv::rat_to_string(rhs) << "\n";
    std::cout << "equal = " << (lhs == rhs ? "yes" : "no") << "\n";
    return lhs == rhs ? 0 : 1;
}

/// Unit-sum lemma suite: both telescoping sums must be exactly 1 for all
/// 0 <= k <= n, 0 <= ell <= ellMax, at `points` pole-free points each.
int run_lemmas(int nMax, int ellMax, std::uint64_t seed, int points) {
    seed = seed_with_env_override(seed);
    long long cells = 0, failures = 0;
    for (int which = 0; which < 2; ++which) {
        const std::string name = which == 0 ? "unit-sum-a" : "unit-sum-c";
        for (int n = 0; n <= nMax; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int ell = 0; ell <= ellMax; ++ell) {
                    ++cells;
                    qhv::Prng rng =
                        qhv::fork_prng(seed, name + ":k=" + std::to_string(k), n, ell);
                    int resamples = 0;
                    for (int p = 0; p < points; ++p) {
                        for (;;) {
                            try {
                                const qhv::SamplePoint pt = qhv::sample_point(rng, 9);
                                const qhv::Rat v = which == 0
                                                       ? qhv::proof_unit_sum_a(n, k, ell, pt)
                                                       : qhv::proof_unit_sum_c(n, k, ell, pt);
                                if (v != 1) {
                                    ++failures;
                                    std::cout << name << " FAIL n=" << n << " k=" << k
                                              << " ell=" << ell
                                              << " t=" << qhv::rat_to_string(pt.t)
                                              << " c=" << qhv::rat_to_string(pt.c)
                                              << " value=" << qhv::rat_to_string(v) << "\n";
                                }
                                break;
                            } catch (const qhv::SamplingExhausted&) {
                                ++failures;
                                break;
                            } catch (const qhv::Error&) {
                                if (++resamples > 100) {
                                    ++failures;
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::cout << "unit-sum lemmas: " << cells << " cells x " << points << " points, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 1;
}

/// Reversal suite: the k -> n-k rewrite must hold termwise (and in the
/// normalized aggregate) for both sum pairs.
int run_reverse(int nMax, int ellMax, std::uint64_t seed, int points) {
    seed = seed_with_env_override(seed);
    long long cells = 0, failures = 0;
    for (int which = 0; which < 2; ++which) {
        const auto pair = which == 0 ? qhv::ReversalPair::aToE : qhv::ReversalPair::cToG;
        const std::string name = which == 0 ? "reverse-a-e" : "reverse-c-g";
        for (int n = 0; n <= nMax; ++n) {
            for (int ell = 0; ell <= ellMax; ++ell) {
                ++cells;
                qhv::Prng rng = qhv::fork_prng(seed, name, n, ell);
                int resamples = 0;
                for (int p = 0; p < points; ++p) {
                    for (;;) {
                        try {
                            const qhv::SamplePoint pt = qhv::sample_point(rng, 9);
                            if (!qhv::reversal_check(n, ell, pt, pair)) {
                                ++failures;
                                std::cout << name << " FAIL n=" << n << " ell=" << ell
                                          << " t=" << qhv::rat_to_string(pt.t)
                                          << " c=" << qhv::rat_to_string(pt.c) << "\n";
                            }
                            break;
                        } catch (const qhv::SamplingExhausted&) {
                            ++failures;
                            break;
                        } catch (const qhv::Error&) {
                            if (++resamples > 100) {
                                ++failures;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    std::cout << "reversal checks: " << cells << " cells x " << points << " points, " << failures
              << " failures\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qhv: exact verifier for terminating q-series / hypergeometric identities"};
    app.require_subcommand(1);

    CLI::App* cmdList = app.add_subcommand("list", "print all catalog identity ids");

    CLI::App* cmdVerify =
        app.add_subcommand("verify", "verify identities over an (n, ell) grid of random points");
    std::string idsCsv = "all";
    qhv::VerificationConfig cfg;
    std::string format = "json";
    std::string outPath;
    cmdVerify->add_option("--ids", idsCsv, "comma-separated identity ids, or 'all'");
    cmdVerify->add_option("--n-max", cfg.nMax, "largest n in the grid")
        ->check(CLI::NonNegativeNumber);
    cmdVerify->add_option("--ell-max", cfg.ellMax, "largest ell in the grid")
        ->check(CLI::NonNegativeNumber);
    cmdVerify->add_option("--points", cfg.pointsPerCell, "random points per grid cell")
        ->check(CLI::PositiveNumber);
    cmdVerify->add_option("--seed", cfg.seed, "PRNG seed (QHV_SEED overrides)");
    cmdVerify->add_option("--bound", cfg.numeratorBound,
                          "max numerator/denominator magnitude of sampled rationals")
        ->check(CLI::Range(2, 1000000));
    cmdVerify->add_option("--max-resamples", cfg.maxResampleAttempts,
                          "per-cell cap on pole-triggered redraws")
        ->check(CLI::PositiveNumber);
    cmdVerify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "md", "markdown"}));
    cmdVerify->add_option("--out", outPath, "write the report to this file instead of stdout");
    bool corrupt = false;
    cmdVerify->add_flag("--corrupt", corrupt,
                        "negative control: scale every closed form by q (or param+1) and "
                        "expect failures");

    CLI::App* cmdEval =
        app.add_subcommand("eval", "evaluate one identity at one explicit point");
    std::string evalId, evalT, evalC;
    int evalN = 0, evalEll = 0;
    cmdEval->add_option("--id", evalId, "identity id")->required();
    cmdEval->add_option("--n", evalN, "summation depth n")->required()
        ->check(CLI::NonNegativeNumber);
    cmdEval->add_option("--ell", evalEll, "shift parameter ell (ignored by pinned identities)")
        ->check(CLI::NonNegativeNumber);
    cmdEval->add_option("--t", evalT, "t as NUM/DEN (q = t^2); q-side identities only");
    cmdEval->add_option("--c", evalC, "c as NUM/DEN (a = c^2), or the classical parameter");

    CLI::App* cmdLemmas =
        app.add_subcommand("lemmas", "run the unit-sum lemma suite (both sums must equal 1)");
    int lemN = 8, lemL = 4, lemPoints = 5;
    std::uint64_t lemSeed = 7;
    cmdLemmas->add_option("--n-max", lemN, "largest n")->check(CLI::NonNegativeNumber);
    cmdLemmas->add_option("--ell-max", lemL, "largest ell")->check(CLI::NonNegativeNumber);
    cmdLemmas->add_option("--seed", lemSeed, "PRNG seed (QHV_SEED overrides)");
    cmdLemmas->add_option("--points", lemPoints, "points per cell")->check(CLI::PositiveNumber);

    CLI::App* cmdReverse =
        app.add_subcommand("reverse", "run the termwise sum-reversal consistency suite");
    int revN = 10, revL = 3, revPoints = 5;
    std::uint64_t revSeed = 7;
    cmdReverse->add_option("--n-max", revN, "largest n")->check(CLI::NonNegativeNumber);
    cmdReverse->add_option("--ell-max", revL, "largest ell")->check(CLI::NonNegativeNumber);
    cmdReverse->add_option("--seed", revSeed, "PRNG seed (QHV_SEED overrides)");
    cmdReverse->add_option("--points", revPoints, "points per cell")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cmdList)) {
            for (const auto& d : qhv::catalog_list()) std::cout << d.id << "\n";
            return 0;
        }
        if (app.got_subcommand(cmdVerify))
            return run_verify(idsCsv, cfg, format, outPath, corrupt);
        if (app.got_subcommand(cmdEval)) return run_eval(evalId, evalN, evalEll, evalT, evalC);
        if (app.got_subcommand(cmdLemmas)) return run_lemmas(lemN, lemL, lemSeed, lemPoints);
        if (app.got_subcommand(cmdReverse)) return run_reverse(revN, revL, revSeed, revPoints);
    } catch (const qhv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable: require_subcommand(1)
}
