#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qhv/catalog.hpp"
#include "qhv/errors.hpp"
#include "qhv/prng.hpp"
#include "qhv/rational.hpp"
#include "qhv/sampling.hpp"

namespace qhv {

struct VerificationConfig {
    std::vector<std::string> identityIds = {"all"};
    int nMax = 12;
    int ellMax = 4;
    int pointsPerCell = 10;
    std::uint64_t seed = 7;
    int numeratorBound = 9;       ///< |num|, |den| of sampled rationals stay <= this
    int maxResampleAttempts = 100; ///< per-cell cap on pole-triggered redraws
    std::string outputFormat = "json"; ///< "json" or "markdown"
};

/// A point where the two sides disagreed (or, with empty value strings, a
/// cell whose resample budget ran out).  Classical identities report their
/// single parameter in the c field and leave t empty.
struct Witness {
    std::string id;
    int n = 0;
    int ell = 0;
    std::string t, c, lhs, rhs;
};

struct IdentityResult {
    std::string id;
    int cells = 0;    ///< grid cells tested
    int points = 0;   ///< points per cell (config echo)
    int failures = 0; ///< disagreeing points plus exhausted cells
};

struct VerificationReport {
    VerificationConfig config;
    std::string status; ///< "pass" iff zero failures
    std::vector<IdentityResult> results;
    std::vector<Witness> witnesses;
    long long resamples = 0; ///< total pole-triggered redraws across the run
    std::string degreeNote;
    long long elapsedMs = 0;
};

/// Negative-control hook: scale_rhs multiplies every closed form by q
/// (q-side) or by param+1 (classical) AFTER evaluation, which must break
/// equality at some sampled point of every identity.
enum class Corruption { none, scale_rhs };

/// Expand "all" / empty to the full catalog (in catalog order); otherwise
/// validate every requested id and keep the requested order.
inline std::vector<std::string> resolve_identity_ids(const std::vector<std::string>& requested) {
    bool all = requested.empty();
    for (const auto& r : requested)
        if (r == "all") all = true;
    std::vector<std::string> out;
    if (all) {
        for (const auto& d : catalog_list()) out.push_back(d.id);
        return out;
    }
    for (const auto& r : requested) {
        catalog_find(r); // throws on unknown ids
        out.push_back(r);
    }
    return out;
}

namespace detail {

inline long long coprime_pairs_up_to(int bound) {
    long long count = 0;
    for (int i = 1; i <= bound; ++i)
        for (int j = 1; j <= bound; ++j)
            if (std::gcd(i, j) == 1) ++count;
    return count;
}

/// Honest Schwartz-Zippel style confidence note.  The degree bounds are
/// deliberately coarse (the q-side difference is a Laurent rational function
/// in t whose numerator degree grows quadratically with n through exponents
/// like q^{n^2}); when the bound exceeds the sample-space size the note says
/// so instead of manufacturing a guarantee.  Depends only on the config, so
/// reports stay deterministic.
inline std::string build_degree_note(const VerificationConfig& cfg) {
    const long long pairs = coprime_pairs_up_to(cfg.numeratorBound);
    const long long sT = 2 * pairs - 2; // signed reduced fractions minus t = +-1
    const long long sC = 2 * pairs;
    const long long sMin = sT < sC ? sT : sC;
    const long long g = static_cast<long long>(cfg.nMax) + cfg.ellMax + 2;
    const long long dQ = 8 * g * g; // coarse t-degree bound of LHS-RHS, q-side
    const long long dC = 4 * g;     // coarse parameter-degree bound, classical

    std::string note = "coarse Schwartz-Zippel bounds at n-max " + std::to_string(cfg.nMax) +
                       ", ell-max " + std::to_string(cfg.ellMax) + ", bound " +
                       std::to_string(cfg.numeratorBound) + ": sample space has " +
                       std::to_string(sT) + " admissible t values and " + std::to_string(sC) +
                       " admissible c/parameter values. ";
    if (dQ < sMin)
        note += "q-side: a wrong identity slips past one point with probability <= " +
                std::to_string(dQ) + "/" + std::to_string(sMin) + "; ";
    else
        note += "q-side: the degree bound " + std::to_string(dQ) +
                " exceeds the per-variable sample space " + std::to_string(sMin) +
                ", so no quantitative per-point guarantee at this bound (raise --bound); ";
    if (dC < sC)
        note += "classical: per-point false-accept <= " + std::to_string(dC) + "/" +
                std::to_string(sC) + ". ";
    else
        note += "classical: degree bound " + std::to_string(dC) +
                " exceeds the parameter space " + std::to_string(sC) +
                ", no quantitative per-point guarantee (raise --bound). ";
    note += "Each cell draws " + std::to_string(cfg.pointsPerCell) +
            " independent points, so residual risk decays geometrically; exact agreement "
            "everywhere is strong evidence, not proof.";
    return note;
}

inline EvalPoint draw_eval_point(Family family, Prng& rng, int bound, int maxAttempts) {
    if (family == Family::qside) return sample_point(rng, bound, SampleConstraints{}, maxAttempts);
    return sample_parameter(rng, bound, SampleConstraints{}, maxAttempts);
}

inline Rat corruption_factor(Family family, const EvalPoint& point) {
    if (family == Family::qside) return as_sample_point(point).q;
    return as_parameter(point) + 1;
}

inline Witness make_witness(const std::string& id, int n, int ell, const EvalPoint& point,
                            const Rat& lhs, const Rat& rhs) {
    Witness w;
    w.id = id;
    w.n = n;
    w.ell = ell;
    if (const auto* sp = std::get_if<SamplePoint>(&point)) {
        w.t = rat_to_string(sp->t);
        w.c = rat_to_string(sp->c);
    } else {
        w.c = rat_to_string(std::get<Rat>(point));
    }
    w.lhs = rat_to_string(lhs);
    w.rhs = rat_to_string(rhs);
    return w;
}

} // namespace detail

/// Walk every requested identity over its (n, ell) grid, evaluating
/// pointsPerCell pole-free points per cell with exact-equality verdicts.
/// Pole exceptions reject the point and redraw (never a verdict); a cell
/// that exhausts its redraw budget is reported as a failure with an empty
/// witness rather than crashing the run.  Every cell owns a Prng forked
/// from (seed, id, n, ell), so results do not depend on traversal order.
inline VerificationReport run_verification(const VerificationConfig& config,
                                           Corruption corruption = Corruption::none) {
    if (config.nMax < 0 || config.ellMax < 0 || config.pointsPerCell < 1)
        throw Error("run_verification: need nMax >= 0, ellMax >= 0, pointsPerCell >= 1");
    const auto started = std::chrono::steady_clock::now();

    VerificationReport rep;
    rep.config = config;
    rep.degreeNote = detail::build_degree_note(config);

    for (const auto& idName : resolve_identity_ids(config.identityIds)) {
        const IdentityDescriptor& d = catalog_find(idName);
        IdentityResult res{d.id, 0, config.pointsPerCell, 0};
        // Identities without a free l (base equations, printed examples) walk
        // a pure n-grid at their pinned l.
        const int ellLo = d.takesEll ? 0 : d.fixedEll;
        const int ellHi = d.takesEll ? config.ellMax : d.fixedEll;
        for (int n = 0; n <= config.nMax; ++n) {
            for (int ell = ellLo; ell <= ellHi; ++ell) {
                ++res.cells;
                Prng rng = fork_prng(config.seed, d.id, n, ell);
                int cellResamples = 0;
                bool exhausted = false;
                for (int p = 0; p < config.pointsPerCell && !exhausted; ++p) {
                    for (;;) {
                        try {
                            const EvalPoint point = detail::draw_eval_point(
                                d.family, rng, config.numeratorBound, config.maxResampleAttempts);
                            const Rat lhs = d.lhs(n, ell, point);
                            Rat rhs = d.rhs(n, ell, point);
                            if (corruption == Corruption::scale_rhs)
                                rhs *= detail::corruption_factor(d.family, point);
                            if (lhs != rhs) {
                                ++res.failures;
                                rep.witnesses.push_back(
                                    detail::make_witness(d.id, n, ell, point, lhs, rhs));
                            }
                            break;
                        } catch (const NonintegralExponent&) {
                            throw; // an integrality assertion failed: a bug, not a bad point
                        } catch (const SamplingExhausted&) {
                            exhausted = true;
                            break;
                        } catch (const Error&) {
                            // A pole or degenerate point: reject and redraw.
                            ++rep.resamples;
                            if (++cellResamples > config.maxResampleAttempts) {
                                exhausted = true;
                                break;
                            }
                        }
                    }
                }
                if (exhausted) {
                    ++res.failures;
                    Witness w;
                    w.id = d.id;
                    w.n = n;
                    w.ell = ell;
                    rep.witnesses.push_back(w); // empty strings: budget ran out
                }
            }
        }
        rep.results.push_back(res);
    }

    long long failures = 0;
    for (const auto& r : rep.results) failures += r.failures;
    rep.status = failures == 0 ? "pass" : "fail";
    rep.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    return rep;
}

} // namespace qhv
