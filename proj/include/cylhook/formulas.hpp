#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cylhook/diagram.hpp"
#include "cylhook/errors.hpp"
#include "cylhook/excited.hpp"
#include "cylhook/parallel.hpp"
#include "cylhook/paths.hpp"
#include "cylhook/rational.hpp"
#include "cylhook/report.hpp"
#include "cylhook/tableaux.hpp"

namespace cylhook {

// ---------------------------------------------------------------------------
// Finite skew hook formula.
// ---------------------------------------------------------------------------

/// n! * sum over excited diagrams D of mu in lambda of prod_{x in lambda\D}
/// 1/h_lambda(x). Exact; equals the number of standard tableaux of
/// lambda/mu.
inline Rational naruse_rhs(const Partition& lambda, const Partition& mu, int jobs = 1) {
    validate_ordinary_partition(lambda);
    validate_ordinary_partition(mu);
    if (!partition_leq(mu, lambda)) throw NotContained("naruse_rhs: mu not contained in lambda");

    std::vector<Cell> all_cells;
    std::vector<long> hooks;
    for (std::size_t a = 0; a < lambda.size(); ++a)
        for (long b = 1; b <= lambda[a]; ++b) {
            Cell c{static_cast<std::int64_t>(a + 1), b};
            all_cells.push_back(c);
            hooks.push_back(hook_length_finite(lambda, c));
        }

    std::vector<ExcitedDiagram> diagrams = enumerate_excited_finite(lambda, mu);
    unsigned long n = static_cast<unsigned long>(partition_size(lambda) - partition_size(mu));

    Rational total = parallel_sum<Rational>(diagrams.size(), jobs, [&](std::size_t i) {
        const std::vector<Cell>& d = diagrams[i].cells;
        std::vector<long> factors;
        factors.reserve(all_cells.size() - d.size());
        std::size_t k = 0;
        for (std::size_t j = 0; j < all_cells.size(); ++j) {
            if (k < d.size() && d[k] == all_cells[j]) {
                ++k;
                continue;
            }
            factors.push_back(hooks[j]);
        }
        return Rational::reciprocal_of_product(factors);
    });
    return Rational::factorial(n) * total;
}

/// Unrestricted linear-extension count of a finite skew diagram given by
/// ordinary partitions.
inline long long finite_skew_count(const Partition& lambda, const Partition& mu) {
    validate_ordinary_partition(lambda);
    validate_ordinary_partition(mu);
    if (!partition_leq(mu, lambda)) throw NotContained("finite_skew_count: mu not contained in lambda");
    if (lambda.empty()) return 1;
    int m = static_cast<int>(lambda.size());
    long ell = std::max(1L, lambda.front() - lambda.back());
    std::vector<long> mu_padded(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < mu.size(); ++i) mu_padded[i] = mu[i];
    // The inner sequence need not be ell-restricted for counting; widen ell
    // until both validate.
    long span = std::max<long>(ell, mu_padded.empty() ? 1 : mu_padded.front() - mu_padded.back());
    GeneralizedPartition gl(lambda, Omega(m, span));
    GeneralizedPartition gm(mu_padded, Omega(m, span));
    return count_linear_extensions(skew_cells(gl, gm));
}

// ---------------------------------------------------------------------------
// Series engines for the cylindric sum.
// ---------------------------------------------------------------------------

/// Incremental windowed enumeration of cylindric excited diagrams with the
/// running sum of hook-reciprocal products. States whose complement falls
/// below the current column threshold wait in `pending_` and are revived
/// when the window grows; since excitations only ever lower canonical
/// columns, every state within a window is reachable through states within
/// the same window and the incremental enumeration is complete.
class CylSeriesEngine {
  public:
    CylSeriesEngine(const GeneralizedPartition& lambda, const GeneralizedPartition& mu, int jobs = 1)
        : lambda_(lambda), jobs_(jobs) {
        SkewShape shape = skew_cells(lambda, mu);
        n_ = shape.size();
        nfact_ = Rational::factorial(static_cast<unsigned long>(n_));
        std::vector<CylCell> start;
        for (const Cell& c : shape.cells) start.push_back({c.row, c.col});
        std::sort(start.begin(), start.end());
        min_col0_ = detail::min_col(start);
        stashed_.insert(detail::cyl_cells_key(start));
        pending_[min_col0_].push_back(std::move(start));
    }

    void extend_to(long window) {
        if (window <= window_) return;
        window_ = window;
        const std::int64_t threshold = min_col0_ - window_;
        std::vector<std::vector<CylCell>> revived;
        while (!pending_.empty() && pending_.begin()->first >= threshold) {
            for (auto& comp : pending_.begin()->second) revived.push_back(std::move(comp));
            pending_.erase(pending_.begin());
        }
        admit(std::move(revived));
        drain(threshold);
    }

    long window() const { return window_; }
    bool exhausted() const { return queue_.empty() && pending_.empty(); }
    Rational partial() const { return nfact_ * sum_products_; }
    const std::vector<Rational>& stratum_sums() const { return stratum_sums_; }
    unsigned long long states() const { return states_; }
    long long n() const { return n_; }

  private:
    // Deduplicates against everything admitted so far (revived states
    // included), then accounts the new states and schedules them for
    // expansion.
    void admit(std::vector<std::vector<CylCell>> batch) {
        std::vector<std::vector<CylCell>> fresh;
        for (auto& comp : batch)
            if (seen_.insert(detail::cyl_cells_key(comp)).second) fresh.push_back(std::move(comp));
        if (fresh.empty()) return;
        std::vector<Rational> terms(fresh.size());
        parallel_for(fresh.size(), jobs_, [&](std::size_t i) {
            std::vector<long> hooks;
            hooks.reserve(fresh[i].size());
            for (const CylCell& c : fresh[i]) hooks.push_back(hook_length_cyl(lambda_, c));
            terms[i] = Rational::reciprocal_of_product(hooks);
        });
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            std::size_t s = static_cast<std::size_t>(min_col0_ - detail::min_col(fresh[i], min_col0_));
            if (stratum_sums_.size() <= s) stratum_sums_.resize(s + 1, Rational(0));
            stratum_sums_[s] += terms[i];
            sum_products_ += terms[i];
            ++states_;
            queue_.push_back(std::move(fresh[i]));
        }
    }

    void drain(std::int64_t threshold) {
        while (!queue_.empty()) {
            std::vector<std::vector<CylCell>> batch;
            batch.swap(queue_);
            std::vector<std::vector<CylCell>> discovered;
            for (const auto& comp : batch) {
                for (const CylCell& y : detail::cyl_active_from_complement(lambda_, comp)) {
                    std::vector<CylCell> next = detail::cyl_excite_complement(lambda_, comp, y);
                    std::int64_t mc = detail::min_col(next);
                    if (mc < threshold) {
                        if (stashed_.insert(detail::cyl_cells_key(next)).second)
                            pending_[mc].push_back(std::move(next));
                        continue;
                    }
                    if (!seen_.count(detail::cyl_cells_key(next)))
                        discovered.push_back(std::move(next));
                }
            }
            admit(std::move(discovered));
        }
    }

    GeneralizedPartition lambda_;
    int jobs_;
    long long n_ = 0;
    Rational nfact_;
    std::int64_t min_col0_ = 0;
    long window_ = -1;
    std::vector<std::vector<CylCell>> queue_;
    std::unordered_set<std::string> seen_;    // admitted
    std::unordered_set<std::string> stashed_; // parked below the window at some point
    std::map<std::int64_t, std::vector<std::vector<CylCell>>, std::greater<std::int64_t>> pending_;
    Rational sum_products_{0};
    std::vector<Rational> stratum_sums_;
    unsigned long long states_ = 0;
};

/// Single-row fast path. The excited diagrams of the one-row shape are in
/// bijection with gap-constrained index tuples (module paths), so the
/// windowed sum is a q-level prefix-sum recursion over the tuple index
/// rather than a state search:
///
///   P_k(j) = P_k(j-1) + w(j) * P_{k-1}(j - ell - 1),   w(j) = 1/(h_j...h_{j+ell})
///
/// with P_0 = 1. The window maps to the tuple bound N = (n - ell) + window,
/// matching the column-threshold semantics of the generic engine exactly.
class BarSeriesEngine {
  public:
    BarSeriesEngine(const GeneralizedPartition& lambda, const GeneralizedPartition& mu) {
        if (lambda.m() != 1 || mu.m() != 1 || lambda.omega() != mu.omega())
            throw Error("BarSeriesEngine: single-row shapes only");
        if (mu.part(1) > lambda.part(1)) throw NotContained("BarSeriesEngine: mu not contained");
        ell_ = lambda.ell();
        n_ = lambda.part(1) - mu.part(1);
        bar_split(n_, ell_, q_, r_);
        nfact_ = Rational::factorial(static_cast<unsigned long>(n_));
        norm_ = std::make_unique<GeneralizedPartition>(std::vector<long>{n_}, Omega(1, ell_));

        std::vector<long> prefix_hooks;
        for (long i = 1; i <= r_; ++i) prefix_hooks.push_back(hook(i));
        prefix_ = Rational::reciprocal_of_product(prefix_hooks);

        ring_width_ = static_cast<std::size_t>(ell_ + 2);
        p_.assign(static_cast<std::size_t>(q_) + 1, std::vector<Rational>(ring_width_, Rational(0)));
        cnt_.assign(static_cast<std::size_t>(q_) + 1, std::vector<long long>(ring_width_, 0));
        // Level 0: the empty prefix tuple, available below every index.
        for (std::size_t t = 0; t < ring_width_; ++t) {
            p_[0][t] = Rational(1);
            cnt_[0][t] = 1;
        }
        j_ = r_; // last processed index; level-k sums are zero there
        if (q_ == 0) {
            current_sum_ = prefix_;
            current_count_ = 1;
        }
    }

    void extend_to(long window) {
        if (window <= window_) return;
        window_ = window;
        if (q_ == 0) return;
        long target = (n_ - ell_) + window_; // tuple bound for this window
        while (j_ < target) step();
    }

    long window() const { return window_; }
    bool exhausted() const { return q_ == 0; }
    Rational partial() const { return nfact_ * current_sum_; }
    const std::vector<Rational>& stratum_sums() const { return stratum_sums_; }
    unsigned long long states() const { return static_cast<unsigned long long>(current_count_); }
    long long n() const { return n_; }

  private:
    long hook(long i) const { return hook_length_cyl(*norm_, CylCell{1, n_ - i + 1}); }

    std::size_t slot(long j) const {
        long t = j % static_cast<long>(ring_width_);
        return static_cast<std::size_t>(t < 0 ? t + static_cast<long>(ring_width_) : t);
    }

    void step() {
        ++j_;
        std::vector<long> hooks;
        for (long u = 0; u <= ell_; ++u) hooks.push_back(hook(j_ + u));
        Rational w = Rational::reciprocal_of_product(hooks);
        Rational prev_top = p_[static_cast<std::size_t>(q_)][slot(j_ - 1)];
        for (long k = 1; k <= q_; ++k) {
            std::size_t ks = static_cast<std::size_t>(k);
            long min_k = r_ + 1 + (k - 1) * (ell_ + 1);
            if (j_ < min_k) {
                p_[ks][slot(j_)] = Rational(0);
                cnt_[ks][slot(j_)] = 0;
                continue;
            }
            p_[ks][slot(j_)] = p_[ks][slot(j_ - 1)] + w * p_[ks - 1][slot(j_ - ell_ - 1)];
            cnt_[ks][slot(j_)] = cnt_[ks][slot(j_ - 1)] + cnt_[ks - 1][slot(j_ - ell_ - 1)];
        }
        current_sum_ = prefix_ * p_[static_cast<std::size_t>(q_)][slot(j_)];
        current_count_ = cnt_[static_cast<std::size_t>(q_)][slot(j_)];
        Rational delta = prefix_ * (p_[static_cast<std::size_t>(q_)][slot(j_)] - prev_top);
        long stratum = j_ - (n_ - ell_);
        if (stratum >= 0) {
            if (stratum_sums_.size() <= static_cast<std::size_t>(stratum))
                stratum_sums_.resize(static_cast<std::size_t>(stratum) + 1, Rational(0));
            stratum_sums_[static_cast<std::size_t>(stratum)] += delta;
        }
    }

    long ell_ = 1;
    long n_ = 0;
    long q_ = 0;
    long r_ = 0;
    Rational nfact_;
    Rational prefix_;
    std::unique_ptr<GeneralizedPartition> norm_;
    std::size_t ring_width_ = 0;
    std::vector<std::vector<Rational>> p_;
    std::vector<std::vector<long long>> cnt_;
    long j_ = 0;
    long window_ = -1;
    Rational current_sum_{0};
    long long current_count_ = 0;
    std::vector<Rational> stratum_sums_;
};

/// Geometric-ratio extrapolation of the series tail from the last two
/// nonzero per-window increments. Heuristic: exact for geometric decay,
/// an underestimate for polynomial decay; it never feeds a verdict.
inline Rational cyl_tail_estimate(const std::vector<Rational>& stratum_sums) {
    const Rational* prev = nullptr;
    const Rational* last = nullptr;
    for (const Rational& s : stratum_sums) {
        if (s.is_zero()) continue;
        prev = last;
        last = &s;
    }
    if (prev == nullptr || last == nullptr)
        throw InsufficientData("cyl_tail_estimate: need at least two nonzero strata");
    Rational r = *last / *prev;
    if (r.sign() < 0) r = Rational(0);
    const Rational r_max(999999, 1000000); // clamp into [0, 1)
    if (r >= Rational(1)) r = r_max;
    return *last * r / (Rational(1) - r);
}

struct SeriesOptions {
    long max_window = 64;
    std::optional<Rational> tol;  // stop once lhs - partial <= tol
    int jobs = 1;
    bool force_generic = false;   // disable the single-row fast path (tests)
    long record_full_limit = 256; // record every window up to this many
};

/// Runs the windowed series for lambda/mu against the restricted
/// linear-extension count. Monotone by positivity, so a partial sum above
/// the count is an exact falsification (Fail).
inline VerificationReport run_cyl_series(const GeneralizedPartition& lambda,
                                         const GeneralizedPartition& mu, const SeriesOptions& opt) {
    VerificationReport rep;
    rep.lhs = Rational(count_restricted(lambda, mu));

    auto record = [&](long w, const Rational& g) {
        if (opt.max_window <= opt.record_full_limit || w <= 16 || (w & (w - 1)) == 0 ||
            w == opt.max_window)
            rep.partial_sums.emplace_back(w, g);
    };

    std::unique_ptr<CylSeriesEngine> generic;
    std::unique_ptr<BarSeriesEngine> bar;
    if (lambda.m() == 1 && !opt.force_generic)
        bar = std::make_unique<BarSeriesEngine>(lambda, mu);
    else
        generic = std::make_unique<CylSeriesEngine>(lambda, mu, opt.jobs);

    auto extend = [&](long w) { bar ? bar->extend_to(w) : generic->extend_to(w); };
    auto partial = [&]() { return bar ? bar->partial() : generic->partial(); };
    auto exhausted = [&]() { return bar ? bar->exhausted() : generic->exhausted(); };

    bool decided = false;
    long w = 0;
    for (; w <= opt.max_window; ++w) {
        extend(w);
        Rational g = partial();
        record(w, g);
        rep.window = w;
        rep.final_sum = g;
        if (g > rep.lhs) {
            rep.verdict = Verdict::Fail;
            decided = true;
            break;
        }
        if (exhausted()) {
            rep.exhausted = true;
            rep.verdict = g == rep.lhs ? Verdict::ExactPass : Verdict::Fail;
            decided = true;
            break;
        }
        if (opt.tol && rep.lhs - g <= *opt.tol) {
            rep.verdict = Verdict::ConvergedWithinTol;
            decided = true;
            break;
        }
    }
    if (!decided) rep.verdict = Verdict::Inconclusive;
    if (rep.partial_sums.empty() || rep.partial_sums.back().first != rep.window)
        rep.partial_sums.emplace_back(rep.window, rep.final_sum);

    const std::vector<Rational>& strata = bar ? bar->stratum_sums() : generic->stratum_sums();
    std::size_t nonzero = 0;
    for (const Rational& s : strata)
        if (!s.is_zero()) ++nonzero;
    if (nonzero >= 2) {
        rep.has_tail_estimate = true;
        rep.tail_estimate = cyl_tail_estimate(strata) * Rational::factorial(
                                static_cast<unsigned long>(bar ? bar->n() : generic->n()));
    }
    rep.states = bar ? bar->states() : generic->states();
    return rep;
}

/// Partial sums up to a fixed window, no tolerance-driven stop.
inline VerificationReport cyl_partial_sum(const GeneralizedPartition& lambda,
                                          const GeneralizedPartition& mu, long window, int jobs = 1,
                                          bool force_generic = false) {
    SeriesOptions opt;
    opt.max_window = window;
    opt.jobs = jobs;
    opt.force_generic = force_generic;
    return run_cyl_series(lambda, mu, opt);
}

/// Windowed verification against the restricted count with an exact
/// rational tolerance. ExactPass only when the excited set was exhausted.
inline VerificationReport verify_conjecture(const GeneralizedPartition& lambda,
                                            const GeneralizedPartition& mu, long window,
                                            const Rational& tol, int jobs = 1,
                                            bool force_generic = false) {
    if (!(tol > Rational(0))) throw Error("verify_conjecture: tol must be positive");
    SeriesOptions opt;
    opt.max_window = window;
    opt.tol = tol;
    opt.jobs = jobs;
    opt.force_generic = force_generic;
    return run_cyl_series(lambda, mu, opt);
}

// ---------------------------------------------------------------------------
// Shift invariance.
// ---------------------------------------------------------------------------

/// Translating both diagrams by u yields another pair of cylindric
/// diagrams with the same extension count and the same series.
///
/// The extension counts are compared exactly. For the series, the column
/// window is a property of the strip presentation: a pure column shift (or
/// any u with u.row divisible by m) maps windows onto windows, so the
/// windowed sums must agree exactly; a general row shift skews canonical
/// columns by up to ell, so the windowed sums are compared by two-sided
/// bracketing g'(w - ell) <= g(w) <= g'(w + ell), which pins down equality
/// of the full series as the window grows.
inline bool shift_invariance_check(const GeneralizedPartition& lambda, const GeneralizedPartition& mu,
                                   const Cell& u, long window = 12) {
    if (lambda.omega() != mu.omega()) throw NotRepresentable("shift_invariance_check: mismatched period");
    const Omega& w = lambda.omega();
    auto shifted = [&](const GeneralizedPartition& g) {
        std::vector<long> parts;
        for (int a = 1; a <= w.m; ++a)
            parts.push_back(static_cast<long>(g.row_bound(a - u.row) + u.col));
        try {
            return GeneralizedPartition(parts, w);
        } catch (const Error& e) {
            throw NotRepresentable(std::string("shift_invariance_check: ") + e.what());
        }
    };
    GeneralizedPartition lambda2 = shifted(lambda);
    GeneralizedPartition mu2 = shifted(mu);
    if (count_restricted(lambda, mu) != count_restricted(lambda2, mu2)) return false;

    if (u.row % w.m == 0)
        return cyl_partial_sum(lambda, mu, window).final_sum ==
               cyl_partial_sum(lambda2, mu2, window).final_sum;

    long pad = w.ell;
    if (window < pad) window = pad;
    auto g1 = [&](long ww) { return cyl_partial_sum(lambda, mu, ww).final_sum; };
    auto g2 = [&](long ww) { return cyl_partial_sum(lambda2, mu2, ww).final_sum; };
    return g1(window - pad) <= g2(window) && g2(window) <= g1(window + pad) &&
           g2(window - pad) <= g1(window) && g1(window) <= g2(window + pad);
}

// ---------------------------------------------------------------------------
// Telescoping identity for gap-constrained tuple sums.
// ---------------------------------------------------------------------------

struct TupleIdentityReport {
    Rational lhs_truncated; // sum over tuples with i_q <= trunc
    Rational rhs_closed;    // 1 / (q! c^q a_{r+1} ... a_{r+ell*q})
    bool telescoping_ok = true;
};

/// For a sequence with a_{i+ell} - a_i = c, the sum over tuples
/// (i_1 < ... < i_q), i_1 >= r+1, gaps >= ell+1, of
/// prod_v 1/(a_{i_v} ... a_{i_v+ell}) collapses to the closed form above.
/// Evaluates the truncated sum, the closed form, and the one-step
/// telescoping identity
///   1/(a_j...a_{j+ell*t-1}) - 1/(a_{j+1}...a_{j+ell*t}) = c*t/(a_j...a_{j+ell*t})
/// on a grid of (j, t).
inline TupleIdentityReport tuple_product_identity_check(long ell, long c, long q, long r,
                                                        const std::function<Rational(long)>& a,
                                                        long trunc) {
    if (ell < 1 || c < 1 || q < 0 || r < 0) throw BadSequence("tuple_product_identity_check: bad parameters");
    long need = std::max(trunc + ell + 1, r + 1 + ell * std::max(q, 1L) + 1);
    need = std::max(need, 6 + 4 * ell + 1); // range touched by the telescoping grid
    for (long i = 1; i + ell <= need; ++i) {
        if (a(i).is_zero()) throw BadSequence("sequence has a zero term");
        if (a(i + ell) - a(i) != Rational(c)) throw BadSequence("sequence increment a_{i+ell} - a_i != c");
    }

    TupleIdentityReport rep;

    // closed form
    Rational denom = Rational::factorial(static_cast<unsigned long>(q));
    for (long k = 0; k < q; ++k) denom *= Rational(c);
    for (long u = 0; u <= ell * q - 1; ++u) denom *= a(r + 1 + u);
    rep.rhs_closed = denom.reciprocal();

    // truncated sum via prefix recursion (values of a may be any rationals)
    auto w = [&](long j) {
        Rational prod(1);
        for (long u = 0; u <= ell; ++u) prod *= a(j + u);
        return prod.reciprocal();
    };
    if (q == 0) {
        rep.lhs_truncated = Rational(1);
    } else {
        std::vector<std::vector<Rational>> P(static_cast<std::size_t>(q) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(trunc) + 2, Rational(0)));
        for (auto& v : P[0]) v = Rational(1);
        for (long k = 1; k <= q; ++k)
            for (long j = 1; j <= trunc; ++j) {
                Rational add(0);
                if (j >= r + 1 + (k - 1) * (ell + 1)) {
                    long back = j - ell - 1;
                    Rational tail = back < 0 ? (k == 1 ? Rational(1) : Rational(0))
                                             : P[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(back) + 1];
                    add = w(j) * tail;
                }
                P[static_cast<std::size_t>(k)][static_cast<std::size_t>(j) + 1] =
                    P[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] + add;
            }
        rep.lhs_truncated = P[static_cast<std::size_t>(q)][static_cast<std::size_t>(trunc) + 1];
    }

    // one-step telescoping on a small grid
    for (long j = 1; j <= std::min<long>(trunc, 6) && rep.telescoping_ok; ++j)
        for (long t = 1; t <= 4 && rep.telescoping_ok; ++t) {
            Rational lhs1(1), lhs2(1), full(1);
            for (long u = 0; u <= ell * t - 1; ++u) lhs1 *= a(j + u);
            for (long u = 1; u <= ell * t; ++u) lhs2 *= a(j + u);
            for (long u = 0; u <= ell * t; ++u) full *= a(j + u);
            if (lhs1.reciprocal() - lhs2.reciprocal() != Rational(c * t) / full)
                rep.telescoping_ok = false;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Bar (single row) theorem machinery.
// ---------------------------------------------------------------------------

struct BarCheckReport {
    long long f = 0;          // restricted extension count (should be 1)
    bool symbolic_ok = false; // q!(ell+1)^q h_1...h_{q*ell+r} == n! exactly
    Rational g_truncated;
    long window = 0;
    bool exhausted = false;
    bool converged = false; // |1 - g| <= tol at `window`
};

/// Checks the single-row case: one restricted extension, the factorial
/// identity behind the closed-form series, and numeric convergence of the
/// truncated series toward 1. Extends the window until the target
/// tolerance is met (or max_window).
inline BarCheckReport bar_formula_check(long n, long ell, const Rational& tol = Rational(1, 1000),
                                        long max_window = 1 << 22) {
    if (n < 1 || ell < 1) throw Error("bar_formula_check: need n, ell >= 1");
    GeneralizedPartition lambda({n}, Omega(1, ell));
    GeneralizedPartition mu({0}, Omega(1, ell));

    BarCheckReport rep;
    rep.f = count_restricted(lambda, mu);

    long q, r;
    bar_split(n, ell, q, r);
    Rational lhs = Rational::factorial(static_cast<unsigned long>(q));
    for (long k = 0; k < q; ++k) lhs *= Rational(ell + 1);
    for (long u = 1; u <= q * ell + r; ++u)
        lhs *= Rational(hook_length_cyl(lambda, CylCell{1, n - u + 1}));
    rep.symbolic_ok = lhs == Rational::factorial(static_cast<unsigned long>(n));

    BarSeriesEngine engine(lambda, mu);
    long w = 0;
    for (;; ++w) {
        engine.extend_to(w);
        Rational g = engine.partial();
        rep.g_truncated = g;
        rep.window = w;
        if (engine.exhausted()) {
            rep.exhausted = true;
            rep.converged = g == Rational(1);
            break;
        }
        Rational gap = g > Rational(1) ? g - Rational(1) : Rational(1) - g;
        if (gap <= tol) {
            rep.converged = true;
            break;
        }
        if (w >= max_window) break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Hook (staircase loop) case: weighted path sums with shifted hooks.
// ---------------------------------------------------------------------------

/// Hook length of the (ell+1)^m rectangle, extended affinely to all of Z^2.
inline long rect_hook(int m, long ell, const Cell& x) {
    return static_cast<long>(ell + m - x.row - x.col + 2);
}

/// The shifted periodic hook weight: writing x = (a + c*m, b - d*ell) with
/// 1 <= a <= m and 2 <= b <= ell+1, the value is
/// ell + m - a - b + (d - c)t + s + 1. For s = 1, t = ell + m it equals the
/// cylindric hook length of the rectangle diagram.
inline long shifted_cyl_hook(int m, long ell, long s, long t, const Cell& x) {
    std::int64_t c = floor_div(x.row - 1, m);
    std::int64_t a = x.row - c * m;
    std::int64_t d = ceil_div(2 - x.col, ell);
    std::int64_t b = x.col + d * ell;
    if (b < 2 || b > ell + 1) throw NoDecomposition("shifted_cyl_hook: no strip decomposition");
    return static_cast<long>(ell + m - a - b + (d - c) * t + s + 1);
}

struct PathSumReport {
    Rational sum;
    Rational closed_form;
    bool equal = false;
};

/// Finite weighted path sum F(ell, m; s) over L((1, ell+1), (m, 2)) with
/// weights 1/(rect_hook + s - 1); closed form
/// (s-1)!/(ell+m+s-2)! * C(ell+m-2, m-1).
inline PathSumReport path_sum_shifted(long ell, int m, long s) {
    if (ell < 1 || m < 1 || s < 1) throw Error("path_sum_shifted: need ell, m, s >= 1");
    PathSumReport rep;
    rep.sum = Rational(0);
    for (const LatticePath& p : enumerate_paths({1, ell + 1}, {m, 2})) {
        std::vector<long> hooks;
        for (const Cell& c : p.cells) hooks.push_back(rect_hook(m, ell, c) + s - 1);
        rep.sum += Rational::reciprocal_of_product(hooks);
    }
    rep.closed_form = Rational::factorial(static_cast<unsigned long>(s - 1)) /
                      Rational::factorial(static_cast<unsigned long>(ell + m + s - 2)) *
                      Rational::binomial(ell + m - 2, m - 1);
    rep.equal = rep.sum == rep.closed_form;
    return rep;
}

namespace detail {

inline Rational strata_path_sum_between(long ell, int m, long s, long t, const Cell& u, const Cell& v) {
    Rational sum(0);
    for (const LatticePath& p : enumerate_paths(u, v)) {
        std::vector<long> hooks;
        for (const Cell& c : p.cells) hooks.push_back(shifted_cyl_hook(m, ell, s, t, c));
        sum += Rational::reciprocal_of_product(hooks);
    }
    return sum;
}

/// Stratum i of the shifted double sum: paths from (1, ell+1-i) to (m, 1-i).
inline Rational path_stratum_sum(long ell, int m, long s, long t, long i) {
    return strata_path_sum_between(ell, m, s, t, {1, ell + 1 - i}, {m, 1 - i});
}

/// Boundary term A_{I+1}: paths from (1, ell-I) to (m, 1-I).
inline Rational path_boundary_term(long ell, int m, long s, long t, long I) {
    return strata_path_sum_between(ell, m, s, t, {1, ell - I}, {m, 1 - I});
}

/// Exact remainder of the truncated double sum after stratum I, by the
/// same telescoping that evaluates the full sum. Valid whenever t >= m
/// (the recursion divides by t - m' + 1 for m' = m..1).
inline Rational path_sum_remainder(long ell, int m, long s, long t, long I) {
    if (m == 1) {
        std::vector<long> hooks;
        for (long k = 0; k <= ell - 1; ++k) hooks.push_back(shifted_cyl_hook(1, ell, s, t, {1, ell - I - k}));
        return Rational(1, t) * Rational::reciprocal_of_product(hooks);
    }
    Rational num = path_boundary_term(ell, m, s, t, I) + path_sum_remainder(ell, m - 1, s + 1, t, I) -
                   path_sum_remainder(ell, m - 1, s, t, I);
    return num / Rational(t - m + 1);
}

} // namespace detail

struct PathStrataReport {
    Rational truncated;
    Rational closed_form;
    std::vector<Rational> stratum_sums;
    bool recurrence_ok = false;   // exact identity between truncations
    bool remainder_checked = false;
    bool remainder_ok = false;    // closed - truncated == telescoped remainder
};

/// Truncated evaluation of the shifted double path sum F(ell, m; s, t) =
/// sum_{i>=0} sum_{paths (1,ell+1-i) -> (m,1-i)} prod 1/h^{s,t}; closed
/// form (s-1)!/((ell+m+s-2)! t) * C(ell+m-2, m-1).
///
/// recurrence_ok verifies, exactly at this truncation,
///   (t-m+1) F_m^{<=I} = F(ell,m;s) - A_{I+1} + F_{m-1,s+1}^{<=I} - F_{m-1,s}^{<=I}
/// (for m = 1, the telescoped closed partial sum instead). When t >= m the
/// exact remainder is also computed and compared against closed - truncated.
inline PathStrataReport path_sum_strata(long ell, int m, long s, long t, long trunc) {
    if (ell < 1 || m < 1 || s < 1 || t < 1 || trunc < 0)
        throw Error("path_sum_strata: need positive parameters");
    PathStrataReport rep;
    rep.truncated = Rational(0);
    for (long i = 0; i <= trunc; ++i) {
        rep.stratum_sums.push_back(detail::path_stratum_sum(ell, m, s, t, i));
        rep.truncated += rep.stratum_sums.back();
    }
    rep.closed_form = Rational::factorial(static_cast<unsigned long>(s - 1)) /
                      (Rational::factorial(static_cast<unsigned long>(ell + m + s - 2)) * Rational(t)) *
                      Rational::binomial(ell + m - 2, m - 1);

    if (m == 1) {
        std::vector<long> first;
        for (long k = 0; k <= ell - 1; ++k) first.push_back(shifted_cyl_hook(1, ell, s, t, {1, ell + 1 - k}));
        Rational expected = Rational(1, t) * (Rational::reciprocal_of_product(first) -
                                              detail::path_sum_remainder(ell, 1, s, t, trunc) * Rational(t));
        // remainder(ell,1,s,t,I) = (1/t) * G(I+1), so expected = (1/t)(G(0) - G(I+1)).
        rep.recurrence_ok = rep.truncated == expected;
    } else if (t != m - 1) {
        Rational lhs = Rational(t - m + 1) * rep.truncated;
        Rational rhs = path_sum_shifted(ell, m, s).sum - detail::path_boundary_term(ell, m, s, t, trunc) +
                       path_sum_strata(ell, m - 1, s + 1, t, trunc).truncated -
                       path_sum_strata(ell, m - 1, s, t, trunc).truncated;
        rep.recurrence_ok = lhs == rhs;
    } else {
        // The division step is singular at t = m-1; the multiplied-out
        // identity (t-m+1) F^{<=I} = rhs degenerates to rhs == 0.
        Rational rhs = path_sum_shifted(ell, m, s).sum - detail::path_boundary_term(ell, m, s, t, trunc) +
                       path_sum_strata(ell, m - 1, s + 1, t, trunc).truncated -
                       path_sum_strata(ell, m - 1, s, t, trunc).truncated;
        rep.recurrence_ok = rhs == Rational(0);
    }

    if (t >= m) {
        rep.remainder_checked = true;
        rep.remainder_ok = rep.closed_form - rep.truncated == detail::path_sum_remainder(ell, m, s, t, trunc);
    }
    return rep;
}

struct HookCheckReport {
    long long f = 0;
    Rational binom;
    bool f_ok = false;
    bool closed_ok = false; // n! * closed form of F(ell,m;1,ell+m) == binom
    std::vector<Rational> partials;
    bool monotone_ok = false;
    bool bounded_ok = false;
};

/// Checks the hook-shaped case lambda = ((ell+1)^m), mu = (ell^{m-1}, 0):
/// the restricted count equals C(ell+m-2, m-1), the closed-form series
/// equals it exactly, and the truncated series increases monotonically
/// toward it.
inline HookCheckReport hook_formula_check(long ell, int m, long window = 10) {
    if (ell < 1 || m < 1) throw Error("hook_formula_check: need ell, m >= 1");
    HookCheckReport rep;
    rep.binom = Rational::binomial(ell + m - 2, m - 1);

    std::vector<long> lparts(static_cast<std::size_t>(m), ell + 1);
    std::vector<long> mparts(static_cast<std::size_t>(m), ell);
    mparts.back() = 0;
    GeneralizedPartition lambda(lparts, Omega(m, ell));
    GeneralizedPartition mu(mparts, Omega(m, ell));

    rep.f = count_restricted(lambda, mu);
    rep.f_ok = Rational(rep.f) == rep.binom;

    long n = ell + m;
    Rational closed = Rational::factorial(static_cast<unsigned long>(n)) *
                      (Rational::factorial(0) /
                       (Rational::factorial(static_cast<unsigned long>(ell + m - 1)) * Rational(n)) *
                       Rational::binomial(ell + m - 2, m - 1));
    rep.closed_ok = closed == rep.binom;

    CylSeriesEngine engine(lambda, mu);
    rep.monotone_ok = true;
    rep.bounded_ok = true;
    Rational prev(-1);
    for (long w = 0; w <= window; ++w) {
        engine.extend_to(w);
        Rational g = engine.partial();
        rep.partials.push_back(g);
        if (!(g > prev) && !engine.exhausted()) rep.monotone_ok = false;
        if (g > rep.binom) rep.bounded_ok = false;
        prev = g;
        if (engine.exhausted()) break;
    }
    return rep;
}

} // namespace cylhook
