#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympl {

// Basis labels for sp(2m).
//
// An index is 1,...,m or a barred copy 1bar,...,mbar, ordered
//   1 > 2 > ... > m > mbar > ... > 1bar.
// Internally an index is its position 1..2m in that chain, so position a <= m
// is the plain index a and position a > m is the barred index (2m-a+1)bar.
//
// A basis element is a non-decreasing pair of positions (c,i), 1 <= c <= i <= 2m:
//   both plain          -> root vector for  eps_c + eps_i
//   plain c, barred i   -> root vector for  eps_c - eps_{2m-i+1}, or the Cartan
//                          element h_c when the two indices coincide (c, cbar)
//   both barred         -> root vector for -eps_{2m-c+1} - eps_{2m-i+1}
// This gives m(2m+1) elements, the dimension of sp(2m).
struct Color {
    int c = 0;
    int i = 0;
    friend bool operator==(const Color&, const Color&) = default;
    friend auto operator<=>(const Color&, const Color&) = default;
};

inline bool color_valid(Color x, int m) { return 1 <= x.c && x.c <= x.i && x.i <= 2 * m; }

inline bool index_barred(int pos, int m) { return pos > m; }
inline int index_value(int pos, int m) { return pos <= m ? pos : 2 * m - pos + 1; }
inline int index_pos(int value, bool barred, int m) { return barred ? 2 * m - value + 1 : value; }

// Rendering uses the combining low line (U+0332) for barred indices, e.g. "1̲".
// parse_color also accepts a trailing '~' as an ASCII alias for the bar.
inline std::string render_index(int pos, int m) {
    std::string s = std::to_string(index_value(pos, m));
    if (index_barred(pos, m)) s += "̲";
    return s;
}

inline std::string render_color(Color x, int m) {
    return render_index(x.c, m) + " " + render_index(x.i, m);
}

inline int parse_index(const std::string& tok, int m) {
    std::size_t p = 0;
    int value = 0;
    while (p < tok.size() && tok[p] >= '0' && tok[p] <= '9') value = value * 10 + (tok[p++] - '0');
    if (p == 0 && value == 0) throw std::invalid_argument("bad index token: " + tok);
    bool barred = false;
    if (p < tok.size()) {
        std::string rest = tok.substr(p);
        if (rest == "~" || rest == "̲")
            barred = true;
        else
            throw std::invalid_argument("bad index token: " + tok);
    }
    if (value < 1 || value > m) throw std::invalid_argument("index out of range: " + tok);
    return index_pos(value, barred, m);
}

// Accepts "1 2~", "1 2̲" and the compact "12~" (single-digit indices only).
inline Color parse_color(const std::string& s, int m) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ') {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    if (toks.size() == 1 && m <= 9) {
        const std::string& t = toks[0];
        std::size_t cut = 1;
        if (cut < t.size() && (t.substr(1, 1) == "~" || t.substr(1, 3) == "̲"))
            cut += t[1] == '~' ? 1 : 2;
        toks = {t.substr(0, cut), t.substr(cut)};
    }
    if (toks.size() != 2) throw std::invalid_argument("bad color string: " + s);
    Color x{parse_index(toks[0], m), parse_index(toks[1], m)};
    if (!color_valid(x, m)) throw std::invalid_argument("indices out of order in color: " + s);
    return x;
}

// 2<eps_i, eps_j> = delta_ij under the normalization that the highest root
// 2 eps_1 has squared length 2. Weights are integer vectors in eps coordinates,
// so inner products live in (1/2)Z and we work with their doubles.
inline long weight_dot2(const std::vector<int>& u, const std::vector<int>& v) {
    long s = 0;
    for (std::size_t t = 0; t < u.size(); ++t) s += static_cast<long>(u[t]) * v[t];
    return s;
}

namespace detail {
// Dense 2m x 2m integer matrix, row-major; rows/cols 0-based with 0..m-1 the
// plain block and m..2m-1 the barred block.
using Mat = std::vector<long>;

inline Mat zero_mat(int n) { return Mat(static_cast<std::size_t>(n) * n, 0); }

inline Mat mat_comm(const Mat& a, const Mat& b, int n) {
    Mat r = zero_mat(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            long s = 0;
            for (int t = 0; t < n; ++t)
                s += a[p * n + t] * b[t * n + q] - b[p * n + t] * a[t * n + q];
            r[p * n + q] = s;
        }
    return r;
}

inline long mat_trace_prod(const Mat& a, const Mat& b, int n) {
    long s = 0;
    for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t) s += a[p * n + t] * b[t * n + p];
    return s;
}
}  // namespace detail

// sp(2m) in its defining matrix realization, with the bracket and the invariant
// form precomputed on the Color basis. The invariant form is the plain trace
// form tr(xy); with it the highest root has squared length 2.
class SymplecticAlgebra {
  public:
    struct Term {
        int color;
        long coeff;
    };

    explicit SymplecticAlgebra(int m) : m_(m) {
        if (m < 1) throw std::invalid_argument("rank must be positive");
        const int n = 2 * m;
        for (int c = 1; c <= n; ++c)
            for (int i = c; i <= n; ++i) colors_.push_back({c, i});
        dim_ = static_cast<int>(colors_.size());
        for (int idx = 0; idx < dim_; ++idx) index_.emplace(colors_[idx], idx);

        mats_.reserve(dim_);
        for (int idx = 0; idx < dim_; ++idx) mats_.push_back(build_matrix(colors_[idx]));

        weights_.reserve(dim_);
        grades_.reserve(dim_);
        for (int idx = 0; idx < dim_; ++idx) {
            Color x = colors_[idx];
            std::vector<int> w(m_, 0);
            add_index_weight(w, x.c);
            add_index_weight(w, x.i);
            weights_.push_back(std::move(w));
            int g = 0;
            if (!index_barred(x.c, m_) && !index_barred(x.i, m_)) g = 1;
            if (index_barred(x.c, m_) && index_barred(x.i, m_)) g = -1;
            grades_.push_back(g);
        }

        bracket_.assign(static_cast<std::size_t>(dim_) * dim_, {});
        form_.assign(static_cast<std::size_t>(dim_) * dim_, 0);
        for (int a = 0; a < dim_; ++a)
            for (int b = 0; b < dim_; ++b) {
                bracket_[key(a, b)] = expand(detail::mat_comm(mats_[a], mats_[b], n));
                form_[key(a, b)] = detail::mat_trace_prod(mats_[a], mats_[b], n);
            }
    }

    int rank() const { return m_; }
    int dim() const { return dim_; }

    const std::vector<Color>& colors() const { return colors_; }
    Color color(int idx) const { return colors_[idx]; }
    int color_index(Color x) const {
        auto it = index_.find(x);
        if (it == index_.end()) throw std::out_of_range("no such color");
        return it->second;
    }

    const std::vector<Term>& bracket(int a, int b) const { return bracket_[key(a, b)]; }
    long form(int a, int b) const { return form_[key(a, b)]; }
    int grade(int idx) const { return grades_[idx]; }
    const std::vector<int>& weight(int idx) const { return weights_[idx]; }

    bool is_cartan(int idx) const {
        Color x = colors_[idx];
        return x.i == 2 * m_ - x.c + 1 && x.c <= m_;
    }
    // h_a, dual to eps_a: eps_b(h_a) = delta_ab.
    int cartan(int a) const { return color_index({a, 2 * m_ - a + 1}); }
    // Root vector for the highest root 2 eps_1.
    int theta() const { return color_index({1, 1}); }
    int theta_opposite() const { return color_index({2 * m_, 2 * m_}); }

    // eps_a coefficient of the weight of color idx, i.e. alpha(h_a) for root vectors.
    int weight_at(int idx, int a) const { return weights_[idx][a - 1]; }

    std::string render(int idx) const { return render_color(colors_[idx], m_); }
    const detail::Mat& matrix(int idx) const { return mats_[idx]; }

  private:
    std::size_t key(int a, int b) const { return static_cast<std::size_t>(a) * dim_ + b; }

    void add_index_weight(std::vector<int>& w, int pos) const {
        if (index_barred(pos, m_))
            w[index_value(pos, m_) - 1] -= 1;
        else
            w[index_value(pos, m_) - 1] += 1;
    }

    detail::Mat build_matrix(Color x) const {
        const int n = 2 * m_;
        detail::Mat y = detail::zero_mat(n);
        bool cb = index_barred(x.c, m_), ib = index_barred(x.i, m_);
        int a = index_value(x.c, m_), b = index_value(x.i, m_);
        if (!cb && !ib) {  // eps_a + eps_b
            y[(a - 1) * n + (m_ + b - 1)] += 1;
            if (a != b) y[(b - 1) * n + (m_ + a - 1)] += 1;
        } else if (!cb && ib) {  // eps_a - eps_b, or h_a when a == b
            y[(a - 1) * n + (b - 1)] += 1;
            y[(m_ + b - 1) * n + (m_ + a - 1)] -= 1;
        } else {  // -eps_a - eps_b, a >= b
            y[(m_ + a - 1) * n + (b - 1)] += 1;
            if (a != b) y[(m_ + b - 1) * n + (a - 1)] += 1;
        }
        return y;
    }

    // Expand y in the Color basis. Each basis element owns one matrix entry no
    // other basis element touches, so coefficients can be read off directly;
    // the reconstruction check below catches anything outside the span.
    std::vector<Term> expand(const detail::Mat& y) const {
        const int n = 2 * m_;
        std::vector<Term> terms;
        for (int idx = 0; idx < dim_; ++idx) {
            Color x = colors_[idx];
            bool cb = index_barred(x.c, m_), ib = index_barred(x.i, m_);
            int a = index_value(x.c, m_), b = index_value(x.i, m_);
            long coeff = 0;
            if (!cb && !ib)
                coeff = y[(a - 1) * n + (m_ + b - 1)];
            else if (!cb && ib)
                coeff = y[(a - 1) * n + (b - 1)];
            else
                coeff = y[(m_ + a - 1) * n + (b - 1)];
            if (coeff != 0) terms.push_back({idx, coeff});
        }
        detail::Mat check = detail::zero_mat(n);
        for (const Term& t : terms)
            for (std::size_t e = 0; e < check.size(); ++e) check[e] += t.coeff * mats_[t.color][e];
        if (check != y) throw std::logic_error("matrix not in the sp(2m) span");
        return terms;
    }

    int m_ = 0;
    int dim_ = 0;
    std::vector<Color> colors_;
    std::map<Color, int> index_;
    std::vector<detail::Mat> mats_;
    std::vector<std::vector<int>> weights_;
    std::vector<int> grades_;
    std::vector<std::vector<Term>> bracket_;
    std::vector<long> form_;
};

// Label-preserving embedding sp(2m) -> sp(2M), m <= M: an index keeps its value
// and its bar. On root data this is the standard corner embedding.
inline Color embed_color(Color x, int m, int big_m) {
    if (big_m < m) throw std::invalid_argument("embedding target rank too small");
    auto conv = [&](int pos) {
        return index_pos(index_value(pos, m), index_barred(pos, m), big_m);
    };
    int c = conv(x.c), i = conv(x.i);
    if (c > i) std::swap(c, i);
    return {c, i};
}

// Structured text dump of the full model: basis labels with weights and grades,
// then all nonzero brackets and form values, in basis order. Stable output,
// suitable for golden-file comparison.
inline void dump_model(const SymplecticAlgebra& g, std::ostream& os) {
    os << "symplectic-model rank " << g.rank() << "\n";
    os << "dim " << g.dim() << "\n";
    for (int idx = 0; idx < g.dim(); ++idx) {
        os << "basis " << idx << " \"" << g.render(idx) << "\" weight (";
        const auto& w = g.weight(idx);
        for (std::size_t t = 0; t < w.size(); ++t) os << (t ? "," : "") << w[t];
        os << ") grade " << g.grade(idx) << "\n";
    }
    for (int a = 0; a < g.dim(); ++a)
        for (int b = 0; b < g.dim(); ++b) {
            const auto& terms = g.bracket(a, b);
            if (terms.empty()) continue;
            os << "bracket \"" << g.render(a) << "\" \"" << g.render(b) << "\" =";
            for (const auto& t : terms) os << " " << t.coeff << "*\"" << g.render(t.color) << "\"";
            os << "\n";
        }
    for (int a = 0; a < g.dim(); ++a)
        for (int b = a; b < g.dim(); ++b)
            if (g.form(a, b) != 0)
                os << "form \"" << g.render(a) << "\" \"" << g.render(b) << "\" = " << g.form(a, b)
                   << "\n";
}

}  // namespace sympl
