#pragma once

#include <stdexcept>
#include <vector>

namespace insdel {

// GF(p^m) for prime powers up to 65536. Elements are indexed 0..q-1 with the
// index read as the coefficient vector of a polynomial over GF(p) in base p
// (so prime fields are just 0..p-1 under arithmetic mod p). The extension
// modulus is the lexicographically smallest monic irreducible of degree m;
// multiplication runs through exp/log tables of a fixed generator.
class GaloisField {
public:
    explicit GaloisField(int q) : q_(q) {
        if (q < 2 || q > 65536) throw std::invalid_argument("galois field: size must be in [2, 65536]");
        factorize();
        if (m_ > 1) find_modulus();
        build_tables();
    }

    int size() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    int add(int a, int b) const {
        check(a); check(b);
        if (p_ == 2) return a ^ b;
        int r = 0, mult = 1;
        while (a > 0 || b > 0) {
            r += ((a % p_ + b % p_) % p_) * mult;
            a /= p_;
            b /= p_;
            mult *= p_;
        }
        return r;
    }

    int neg(int a) const {
        check(a);
        if (p_ == 2) return a;
        int r = 0, mult = 1;
        while (a > 0) {
            int d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * mult;
            a /= p_;
            mult *= p_;
        }
        return r;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        check(a); check(b);
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }

    int inv(int a) const {
        check(a);
        if (a == 0) throw std::domain_error("galois field: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    int pow(int a, long long e) const {
        check(a);
        if (a == 0) return e == 0 ? 1 : 0;
        long long le = log_[a] % (q_ - 1) * (e % (q_ - 1)) % (q_ - 1);
        if (le < 0) le += q_ - 1;
        return exp_[le];
    }

private:
    void check(int a) const {
        if (a < 0 || a >= q_) throw std::invalid_argument("galois field: element out of range");
    }

    void factorize() {
        int base = 0;
        for (int p = 2; p * p <= q_; ++p) {
            if (q_ % p == 0) {
                base = p;
                break;
            }
        }
        if (base == 0) { // q itself prime
            p_ = q_;
            m_ = 1;
            return;
        }
        p_ = base;
        m_ = 0;
        int v = q_;
        while (v > 1) {
            if (v % p_ != 0)
                throw std::invalid_argument("galois field: size is not a prime power");
            v /= p_;
            ++m_;
        }
    }

    // Polynomial helpers over GF(p); coefficient vectors, lowest degree first.
    using Poly = std::vector<int>;

    static int poly_deg(const Poly& f) {
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            if (f[i] != 0) return i;
        return -1;
    }

    Poly poly_mod(Poly a, const Poly& f) const {
        const int df = poly_deg(f);
        for (int i = poly_deg(a); i >= df; --i) {
            if (a[i] == 0) continue;
            // f is monic
            const int factor = a[i];
            for (int j = 0; j <= df; ++j) {
                int v = (a[i - df + j] - factor * f[j]) % p_;
                if (v < 0) v += p_;
                a[i - df + j] = v;
            }
        }
        a.resize(df);
        return a;
    }

    static Poly from_index(int idx, int p, int len) {
        Poly f(len, 0);
        for (int i = 0; i < len && idx > 0; ++i) {
            f[i] = idx % p;
            idx /= p;
        }
        return f;
    }

    static int to_index(const Poly& f, int p) {
        int idx = 0;
        for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) idx = idx * p + f[i];
        return idx;
    }

    bool divides(const Poly& g, const Poly& f) const {
        Poly r = f;
        const int dg = poly_deg(g);
        const int inv_lead = mod_inverse(g[dg]);
        for (int i = poly_deg(r); i >= dg; --i) {
            if (r[i] == 0) continue;
            const int factor = static_cast<int>(static_cast<long long>(r[i]) * inv_lead % p_);
            for (int j = 0; j <= dg; ++j) {
                int v = (r[i - dg + j] - factor * g[j]) % p_;
                if (v < 0) v += p_;
                r[i - dg + j] = v;
            }
        }
        return poly_deg(r) < 0;
    }

    int mod_inverse(int a) const { // inverse mod prime p_
        long long r = 1, b = a, e = p_ - 2;
        while (e > 0) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<int>(r);
    }

    void find_modulus() {
        int pm = 1;
        for (int i = 0; i < m_; ++i) pm *= p_;
        for (int lower = 0; lower < pm; ++lower) {
            Poly f = from_index(lower, p_, m_ + 1);
            f[m_] = 1;
            bool irreducible = true;
            for (int d = 1; irreducible && 2 * d <= m_; ++d) {
                int pd = 1;
                for (int i = 0; i < d; ++i) pd *= p_;
                for (int g_lower = 0; g_lower < pd; ++g_lower) {
                    Poly g = from_index(g_lower, p_, d + 1);
                    g[d] = 1;
                    if (divides(g, f)) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) {
                modulus_ = f;
                return;
            }
        }
        throw std::logic_error("galois field: no irreducible polynomial found");
    }

    int mul_slow(int a, int b) const {
        if (m_ == 1)
            return static_cast<int>(static_cast<long long>(a) * b % p_);
        Poly pa = from_index(a, p_, m_), pb = from_index(b, p_, m_);
        Poly prod(2 * m_, 0);
        for (int i = 0; i < m_; ++i) {
            if (pa[i] == 0) continue;
            for (int j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
        }
        return to_index(poly_mod(std::move(prod), modulus_), p_);
    }

    void build_tables() {
        std::vector<int> prime_factors;
        int v = q_ - 1;
        for (int p = 2; p * p <= v; ++p)
            if (v % p == 0) {
                prime_factors.push_back(p);
                while (v % p == 0) v /= p;
            }
        if (v > 1) prime_factors.push_back(v);

        auto pow_slow = [&](int a, int e) {
            int r = 1;
            while (e > 0) {
                if (e & 1) r = mul_slow(r, a);
                a = mul_slow(a, a);
                e >>= 1;
            }
            return r;
        };
        int gen = 0;
        for (int g = 1; g < q_; ++g) {
            bool primitive = true;
            for (int pf : prime_factors)
                if (pow_slow(g, (q_ - 1) / pf) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) {
                gen = g;
                break;
            }
        }
        if (gen == 0) throw std::logic_error("galois field: no generator found");

        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        int cur = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = mul_slow(cur, gen);
        }
    }

    int q_, p_ = 0, m_ = 0;
    Poly modulus_;
    std::vector<int> exp_, log_;
};

} // namespace insdel
