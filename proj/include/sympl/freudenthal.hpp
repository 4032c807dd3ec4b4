#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace sympl {

// Graded dimensions of the level-k vacuum module by Freudenthal's recursion,
// run on the affine weight lattice. A weight is stored as its finite part f
// (an integer vector in the standard coordinates, doubled pairing = plain dot
// product) together with the depth n below the highest weight. Independent of
// the module machinery on purpose: the two routes share no code.
class CharacterOracle {
  public:
    CharacterOracle(int ell, int level, int max_degree)
        : ell_(ell), level_(level), max_degree_(max_degree) {
        if (ell < 1 || level < 1 || max_degree < 0)
            throw std::invalid_argument("bad character oracle parameters");
        rho_.resize(ell);
        for (int i = 0; i < ell; ++i) rho_[i] = ell - i;
        build_roots();
        long dual_coxeter = ell_ + 1;
        scale_ = 4L * (level_ + dual_coxeter);
        rho_norm_ = dot2(rho_, rho_);
        mult_.resize(max_degree + 1);
        for (int n = 0; n <= max_degree; ++n) fill_depth(n);
    }

    int rank() const { return ell_; }
    int level() const { return level_; }
    int max_degree() const { return max_degree_; }

    Int weight_multiplicity(int n, const std::vector<int>& f) const {
        check_depth(n);
        auto it = mult_[n].find(f);
        return it == mult_[n].end() ? Int(0) : it->second;
    }

    Int graded_dim(int n) const {
        check_depth(n);
        Int total = 0;
        for (const auto& [f, m] : mult_[n]) total += m;
        return total;
    }

    std::vector<Int> graded_dims() const {
        std::vector<Int> out;
        for (int n = 0; n <= max_degree_; ++n) out.push_back(graded_dim(n));
        return out;
    }

  private:
    using Vec = std::vector<int>;

    static long dot2(const Vec& a, const Vec& b) {
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
        return s;
    }

    void build_roots() {
        for (int i = 0; i < ell_; ++i)
            for (int j = i + 1; j < ell_; ++j) {
                Vec v(ell_, 0);
                v[i] = 1;
                v[j] = -1;
                positive_.push_back(v);
                v[j] = 1;
                positive_.push_back(v);
            }
        for (int i = 0; i < ell_; ++i) {
            Vec v(ell_, 0);
            v[i] = 2;
            positive_.push_back(v);
        }
        all_ = positive_;
        for (const Vec& v : positive_) {
            Vec neg(ell_);
            for (int i = 0; i < ell_; ++i) neg[i] = -v[i];
            all_.push_back(neg);
        }
    }

    void check_depth(int n) const {
        if (n < 0 || n > max_degree_) throw std::out_of_range("depth outside the table");
    }

    // Finite parts live in the root lattice (even coordinate sum) inside the
    // ball |f + rho|^2 <= |rho|^2 + 2n(k + h). Everything outside has
    // multiplicity zero, which the map lookups supply for free.
    std::vector<Vec> candidates(int n) const {
        long bound = rho_norm_ + scale_ * n;
        std::vector<Vec> out;
        Vec v(ell_, 0);
        auto rec = [&](auto&& self, int pos, long left) -> void {
            if (pos == ell_) {
                Vec f(ell_);
                int parity = 0;
                for (int i = 0; i < ell_; ++i) {
                    f[i] = v[i] - rho_[i];
                    parity += f[i];
                }
                if (parity % 2 == 0) out.push_back(std::move(f));
                return;
            }
            int r = 0;
            while (static_cast<long>(r + 1) * (r + 1) <= left) ++r;
            for (int c = -r; c <= r; ++c) {
                v[pos] = c;
                self(self, pos + 1, left - static_cast<long>(c) * c);
            }
        };
        rec(rec, 0, bound);
        std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
            long ha = dot2(a, rho_), hb = dot2(b, rho_);
            if (ha != hb) return ha > hb;
            return a < b;
        });
        return out;
    }

    Int lookup(int n, const Vec& f) const {
        if (n < 0) return 0;
        auto it = mult_[n].find(f);
        return it == mult_[n].end() ? Int(0) : it->second;
    }

    // One real-root family (alpha, d): sum over j of
    // (2kd + (f + j alpha, alpha)) * mult(f + j alpha, n - jd), doubled pairing.
    Int real_root_sum(int n, const Vec& f, const Vec& alpha, int d, long bound) const {
        Int acc = 0;
        Vec fj = f;
        long prev = dot2_plus_rho(f);
        for (int j = 1;; ++j) {
            for (int i = 0; i < ell_; ++i) fj[i] = f[i] + j * alpha[i];
            if (d > 0) {
                if (n - static_cast<long>(j) * d < 0) break;
            } else {
                long val = dot2_plus_rho(fj);
                if (val > bound && val > prev) break;  // convex, escaping the ball
                prev = val;
            }
            Int m = lookup(n - j * d, fj);
            if (m != 0) {
                long pairing = 2L * level_ * d + dot2(fj, alpha);
                acc += Int(pairing) * m;
            }
        }
        return acc;
    }

    long dot2_plus_rho(const Vec& f) const {
        long s = 0;
        for (int i = 0; i < ell_; ++i) {
            long c = f[i] + rho_[i];
            s += c * c;
        }
        return s;
    }

    void fill_depth(int n) {
        long bound = rho_norm_ + scale_ * n;
        for (const Vec& f : candidates(n)) {
            long denom2 = rho_norm_ - dot2_plus_rho(f) + scale_ * n;
            if (denom2 == 0) {
                // On the shifted orbit of the highest weight: only the highest
                // weight itself carries a nonzero multiplicity.
                bool top = n == 0 && std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
                if (top) mult_[n][f] = 1;
                continue;
            }
            Int rhs = 0;
            for (const Vec& alpha : positive_) rhs += real_root_sum(n, f, alpha, 0, bound);
            for (int d = 1; d <= n; ++d) {
                for (const Vec& alpha : all_) rhs += real_root_sum(n, f, alpha, d, bound);
                // imaginary roots: finite part zero, multiplicity = rank
                Int imag = 0;
                for (int j = 1; j * d <= n; ++j) {
                    Int m = lookup(n - j * d, f);
                    if (m != 0) imag += Int(2L * level_ * d) * m;
                }
                rhs += Int(ell_) * imag;
            }
            rhs *= 2;
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rhs.get_mpz_t(), Int(denom2).get_mpz_t());
            if (r != 0) throw std::logic_error("multiplicity recursion not integral");
            if (q != 0) mult_[n][f] = q;
        }
    }

    int ell_;
    int level_;
    int max_degree_;
    Vec rho_;
    long scale_;
    long rho_norm_;
    std::vector<Vec> positive_;
    std::vector<Vec> all_;
    std::vector<std::map<Vec, Int>> mult_;
};

}  // namespace sympl
