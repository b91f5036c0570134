#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "insdel/core.hpp"
#include "insdel/rational.hpp"
#include "insdel/rng.hpp"

namespace insdel {

using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

// x * log(1/x), continuously extended with 0 at x = 0.
inline double xlog1x(double x) { return x <= 0.0 ? 0.0 : x * std::log(1.0 / x); }

inline double log_q(double v, int q) { return std::log(v) / std::log(static_cast<double>(q)); }

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

inline BigInt big_pow(long long base, long long e) {
    BigInt r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace detail

// Rate ceiling against gamma n adversarial insertions,
// 1 - log_q(g+1) - g(log_q((g+1)/g) - log_q(q/(q-1))). The bound hits 0 at
// gamma = q-1 and is vacuous past it, where no constant-rate code survives.
inline double insertion_rate_upper(int q, const Rational& gamma) {
    if (q < 2) throw std::domain_error("insertion_rate_upper: q must be >= 2");
    if (gamma < Rational(0) || gamma > Rational(q - 1))
        throw std::domain_error("insertion_rate_upper: need 0 <= gamma <= q-1");
    if (gamma.is_zero()) return 1.0;
    const double g = gamma.value();
    return 1.0 - detail::log_q(g + 1.0, q) -
           g * (detail::log_q((g + 1.0) / g, q) -
                detail::log_q(static_cast<double>(q) / (q - 1.0), q));
}

namespace detail {
// f(x) = (1-x)(1 - log_q(1/(1-x)))
inline double deletion_f(double x, int q) {
    if (x <= 0.0) return 1.0;
    return (1.0 - x) * (1.0 - log_q(1.0 / (1.0 - x), q));
}
} // namespace detail

// Rate ceiling against delta n deletions: f(delta) when delta q is integral,
// otherwise the convex combination (1-qd')f(d/q) + qd' f((d+1)/q). Hits 0 at
// delta = (q-1)/q, past which no constant-rate code exists.
inline double deletion_rate_upper(int q, const Rational& delta) {
    if (q < 2) throw std::domain_error("deletion_rate_upper: q must be >= 2");
    if (delta < Rational(0) || delta > Rational(q - 1, q))
        throw std::domain_error("deletion_rate_upper: need 0 <= delta <= (q-1)/q");
    const long long d = (delta * Rational(q)).floor();
    const Rational delta_prime = delta - Rational(d, q);
    if (delta_prime.is_zero()) return detail::deletion_f(delta.value(), q);
    const double w = (delta_prime * Rational(q)).value();
    return (1.0 - w) * detail::deletion_f(static_cast<double>(d) / q, q) +
           w * detail::deletion_f(static_cast<double>(d + 1) / q, q);
}

struct RoundingGeometry {
    double g = 0.0;          // (1-x) log2(1/(1-x)), bits
    double f_piecewise = 0.0; // segments (0,0)-(0.5,0.2)-(1,0)
    double g_prime = 0.0;     // chord of g between the adjacent multiples of 1/q
};

namespace detail {
inline double g_bits(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return (1.0 - x) * std::log2(1.0 / (1.0 - x));
}
inline double f_piecewise(double x) { return x <= 0.5 ? 0.4 * x : 0.4 * (1.0 - x); }
} // namespace detail

inline RoundingGeometry rounding_geometry(const Rational& delta, int q) {
    if (q < 2) throw std::domain_error("rounding_geometry: q must be >= 2");
    if (delta <= Rational(0) || delta >= Rational(1))
        throw std::domain_error("rounding_geometry: need 0 < delta < 1");
    const long long d = (delta * Rational(q)).floor();
    const Rational delta_prime = delta - Rational(d, q);
    const double w = (delta_prime * Rational(q)).value();
    RoundingGeometry out;
    out.g = detail::g_bits(delta.value());
    out.f_piecewise = detail::f_piecewise(delta.value());
    out.g_prime = (1.0 - w) * detail::g_bits(static_cast<double>(d) / q) +
                  w * detail::g_bits(static_cast<double>(d + 1) / q);
    return out;
}

// Minimum alphabet size 2^(f(delta)/eps) forced on any rate 1-delta-eps
// deletion code.
inline double alphabet_lower_bound(const Rational& delta, const Rational& epsilon) {
    if (delta <= Rational(0) || delta >= Rational(1))
        throw std::domain_error("alphabet_lower_bound: need 0 < delta < 1");
    if (epsilon <= Rational(0)) throw std::domain_error("alphabet_lower_bound: need epsilon > 0");
    return std::exp2(detail::f_piecewise(delta.value()) / epsilon.value());
}

// Random-coding threshold for list size l against deletions:
// 1 - H_q(delta) - (1-delta)/(l+1), with H_q the q-ary entropy.
inline double random_deletion_rate(int q, const Rational& delta, int l) {
    if (q < 2) throw std::domain_error("random_deletion_rate: q must be >= 2");
    if (l < 1) throw std::domain_error("random_deletion_rate: l must be >= 1");
    if (delta < Rational(0) || delta > Rational(q - 1, q))
        throw std::domain_error("random_deletion_rate: need 0 <= delta <= (q-1)/q");
    const double dl = delta.value();
    const double lq = std::log(static_cast<double>(q));
    return 1.0 - detail::xlog1x(1.0 - dl) / lq - detail::xlog1x(dl) / lq -
           dl * detail::log_q(q - 1.0, q) - (1.0 - dl) / (l + 1);
}

// Same expression without the list-size term: above it random codes stop
// being list-decodable with high probability.
inline double random_deletion_converse(int q, const Rational& delta) {
    if (q < 2) throw std::domain_error("random_deletion_converse: q must be >= 2");
    if (delta < Rational(0) || delta > Rational(q - 1, q))
        throw std::domain_error("random_deletion_converse: need 0 <= delta <= (q-1)/q");
    const double dl = delta.value();
    const double lq = std::log(static_cast<double>(q));
    return 1.0 - detail::xlog1x(1.0 - dl) / lq - detail::xlog1x(dl) / lq -
           dl * detail::log_q(q - 1.0, q);
}

// Random-coding threshold for list size l against insertions:
// 1 - log_q(g+1) - g log_q((g+1)/g) - (g+1)/(l+1).
inline double random_insertion_rate(int q, const Rational& gamma, int l) {
    if (q < 2) throw std::domain_error("random_insertion_rate: q must be >= 2");
    if (l < 1) throw std::domain_error("random_insertion_rate: l must be >= 1");
    if (gamma < Rational(0) || gamma > Rational(q - 1))
        throw std::domain_error("random_insertion_rate: need 0 <= gamma <= q-1");
    const double g = gamma.value();
    const double gamma_terms =
        g <= 0.0 ? 0.0 : detail::log_q(g + 1.0, q) + g * detail::log_q((g + 1.0) / g, q);
    return 1.0 - gamma_terms - (g + 1.0) / (l + 1);
}

struct ProbabilityEstimate {
    double estimate = 0.0;
    bool exact = false;
    long long trials = 0;
    double ci95 = 0.0;
    BigRational exact_value = 0;
};

// Exact probability that a uniform length-m string is a subsequence of z:
// distinct-subsequence count over q^m.
inline ProbabilityEstimate subsequence_prob_exact(const SymbolString& z, int m) {
    const BigInt count = count_distinct_subsequences(z, m);
    const BigInt denom = detail::big_pow(z.q(), m);
    ProbabilityEstimate est;
    est.exact = true;
    est.exact_value = BigRational(count, denom);
    est.estimate = static_cast<double>(est.exact_value);
    return est;
}

// Exact probability that a fixed length-m string is a subsequence of a
// uniform length-N string: sum over the leftmost occurrence,
// (q-1)^{-m} sum_{l=m}^{N} C(l-1, m-1) ((q-1)/q)^l. Independent of which
// fixed string is asked about.
inline BigRational subsequence_containment_prob(int m, int N, int q) {
    if (q < 2 || m < 0 || N < 0) throw std::domain_error("subsequence_containment_prob: bad arguments");
    if (m == 0) return 1;
    if (m > N) return 0;
    BigInt acc = 0;
    for (int l = m; l <= N; ++l)
        acc += detail::binomial(l - 1, m - 1) * detail::big_pow(q - 1, l - m) *
               detail::big_pow(q, N - l);
    return BigRational(acc, detail::big_pow(q, N));
}

// The looser closed form with C(l, m) in place of C(l-1, m-1); an upper bound
// on the containment probability and the expression the expectation
// calculations run through.
inline BigRational subsequence_count_upper_bound(int m, int N, int q) {
    if (q < 2 || m < 0 || N < 0) throw std::domain_error("subsequence_count_upper_bound: bad arguments");
    if (m == 0) return 1;
    if (m > N) return 0;
    BigInt acc = 0;
    for (int l = m; l <= N; ++l)
        acc += detail::binomial(l, m) * detail::big_pow(q - 1, l - m) * detail::big_pow(q, N - l);
    return BigRational(acc, detail::big_pow(q, N));
}

// Exact count of the deletion adversary's reachable-output ensemble,
// C(q, q(1-delta)) * [q(1-delta)]^{n(1-delta)}; needs delta q and delta n
// integral.
inline BigInt deletion_ensemble_bound(int q, const Rational& delta, int n) {
    if (q < 2) throw std::domain_error("deletion_ensemble_bound: q must be >= 2");
    if (delta < Rational(0) || delta > Rational(q - 1, q))
        throw std::domain_error("deletion_ensemble_bound: need 0 <= delta <= (q-1)/q");
    const Rational surviving_symbols = Rational(q) * (Rational(1) - delta);
    const Rational surviving_len = Rational(n) * (Rational(1) - delta);
    if (!surviving_symbols.is_integer() || !surviving_len.is_integer())
        throw std::domain_error("deletion_ensemble_bound: delta q and delta n must be integral");
    return detail::binomial(q, surviving_symbols.num) *
           detail::big_pow(surviving_symbols.num, surviving_len.num);
}

struct McConfig {
    int q = 2;
    int n = 8;
    Rational rate;
    enum class Mode { deletions, insertions } mode = Mode::deletions;
    Rational amount; // delta or gamma
    long long trials = 1000;
    std::uint64_t seed = 1;
    long long code_cap = 1LL << 20;
};

struct McSummary {
    double mean = 0.0;
    double stddev = 0.0;
    double ci95 = 0.0;
    long long max_count = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long codewords = 0;
    int received_len = 0;
};

// Samples random codes of q^ceil(R n) codewords; per trial draws a fresh code
// and a uniform received word z, then counts the codewords confusable with z:
// codewords containing z as a subsequence (deletion channel) or contained in
// z (insertion channel).
inline McSummary mc_random_code_list_profile(const McConfig& config) {
    if (config.q < 2) throw std::domain_error("mc profile: q must be >= 2");
    if (config.n < 1 || config.trials < 1) throw std::domain_error("mc profile: bad sizes");
    const Rational amount = config.amount;
    int received_len = 0;
    if (config.mode == McConfig::Mode::deletions) {
        if (amount < Rational(0) || amount >= Rational(1))
            throw std::domain_error("mc profile: delta must be in [0, 1)");
        received_len = config.n - static_cast<int>(amount.floor_times(config.n));
    } else {
        if (amount < Rational(0)) throw std::domain_error("mc profile: gamma must be >= 0");
        received_len = config.n + static_cast<int>(amount.floor_times(config.n));
    }
    const long long exponent = (config.rate * Rational(config.n)).ceil();
    if (exponent < 0) throw std::domain_error("mc profile: negative rate exponent");
    long long codewords = 1;
    for (long long i = 0; i < exponent; ++i) {
        codewords *= config.q;
        if (codewords > config.code_cap)
            throw std::domain_error("mc profile: q^ceil(Rn) exceeds the code cap");
    }

    const Alphabet alphabet(config.q);
    auto draw = [&](Rng& rng, int len) {
        std::vector<Symbol> syms(len);
        for (int i = 0; i < len; ++i) syms[i] = rng.range(1, config.q);
        return SymbolString(alphabet, std::move(syms));
    };

    double sum = 0.0, sum_sq = 0.0;
    long long max_count = 0;
    for (long long t = 0; t < config.trials; ++t) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(t)));
        SymbolString z = draw(rng, received_len);
        long long count = 0;
        for (long long c = 0; c < codewords; ++c) {
            SymbolString y = draw(rng, config.n);
            const bool confusable = config.mode == McConfig::Mode::deletions
                                        ? is_subsequence(z, y)
                                        : is_subsequence(y, z);
            if (confusable) ++count;
        }
        sum += static_cast<double>(count);
        sum_sq += static_cast<double>(count) * static_cast<double>(count);
        max_count = std::max(max_count, count);
    }
    McSummary s;
    s.trials = config.trials;
    s.seed = config.seed;
    s.codewords = codewords;
    s.received_len = received_len;
    s.mean = sum / static_cast<double>(config.trials);
    if (config.trials > 1) {
        const double var =
            std::max(0.0, (sum_sq - sum * sum / config.trials) / (config.trials - 1));
        s.stddev = std::sqrt(var);
        s.ci95 = 1.96 * s.stddev / std::sqrt(static_cast<double>(config.trials));
    }
    s.max_count = max_count;
    return s;
}

// One evaluated bound on a grid cell; value absent means the cell was out of
// the bound's domain and the row records that instead of being dropped.
struct RateReportRow {
    std::optional<int> q;
    std::optional<Rational> delta;
    std::optional<Rational> gamma;
    std::optional<int> l;
    std::string bound_name;
    std::optional<double> value;
    std::string provenance;
};

inline std::vector<RateReportRow> evaluate_rate_grid(
    const std::vector<int>& qs, const std::vector<Rational>& deltas,
    const std::vector<Rational>& gammas, const std::vector<int>& ls,
    const std::optional<Rational>& epsilon) {
    std::vector<RateReportRow> rows;
    auto emit = [&](RateReportRow row, auto&& eval, const std::string& provenance) {
        try {
            row.value = eval();
            row.provenance = provenance;
        } catch (const std::domain_error&) {
            row.value = std::nullopt;
            row.provenance = "domain_error";
        }
        rows.push_back(std::move(row));
    };
    for (int q : qs) {
        for (const Rational& delta : deltas) {
            RateReportRow base;
            base.q = q;
            base.delta = delta;
            base.bound_name = "deletion_upper";
            emit(base, [&] { return deletion_rate_upper(q, delta); }, "converse-deletions");
            for (int l : ls) {
                RateReportRow r = base;
                r.l = l;
                r.bound_name = "random_deletion_rate";
                emit(r, [&] { return random_deletion_rate(q, delta, l); },
                     "random-coding-deletions");
            }
        }
        for (const Rational& gamma : gammas) {
            RateReportRow base;
            base.q = q;
            base.gamma = gamma;
            base.bound_name = "insertion_upper";
            emit(base, [&] { return insertion_rate_upper(q, gamma); }, "converse-insertions");
            for (int l : ls) {
                RateReportRow r = base;
                r.l = l;
                r.bound_name = "random_insertion_rate";
                emit(r, [&] { return random_insertion_rate(q, gamma, l); },
                     "random-coding-insertions");
            }
        }
    }
    if (epsilon) {
        for (const Rational& delta : deltas) {
            RateReportRow r;
            r.delta = delta;
            r.bound_name = "alphabet_lower_bound";
            emit(r, [&] { return alphabet_lower_bound(delta, *epsilon); },
                 "alphabet-lower-bound");
        }
    }
    return rows;
}

} // namespace insdel
