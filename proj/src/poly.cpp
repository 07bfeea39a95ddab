#include "a4cx/poly.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "a4cx/errors.hpp"

namespace a4cx {

Poly Poly::monomial(Field f, int e1, int e2, Scalar coeff) {
    if (coeff.field() != f) coeff = Scalar(f, coeff.bits());
    Poly p(f);
    p.add_term(e1, e2, coeff);
    return p;
}

int Poly::degree() const {
    if (comps_.empty()) throw DomainError("degree of zero polynomial");
    if (comps_.size() != 1)
        throw DomainError("degree of inhomogeneous polynomial");
    return comps_.begin()->first;
}

Scalar Poly::coeff(int e1, int e2) const {
    const int d = e1 + e2;
    const auto it = comps_.find(d);
    if (it == comps_.end()) return Scalar::zero(field_);
    return it->second[static_cast<std::size_t>(e2)];
}

void Poly::add_term(int e1, int e2, Scalar c) {
    if (e1 < 0 || e2 < 0) throw DomainError("negative exponent");
    if (c.is_zero()) return;
    const int d = e1 + e2;
    auto& comp = comps_[d];
    if (comp.empty())
        comp.assign(static_cast<std::size_t>(d + 1), Scalar::zero(field_));
    auto& slot = comp[static_cast<std::size_t>(e2)];
    slot = slot + c;
    normalize();
}

void Poly::normalize() {
    for (auto it = comps_.begin(); it != comps_.end();) {
        const bool zero =
            std::all_of(it->second.begin(), it->second.end(),
                        [](const Scalar& s) { return s.is_zero(); });
        it = zero ? comps_.erase(it) : std::next(it);
    }
}

MatrixF Poly::component_row(int d) const {
    MatrixF row(field_, 1, d + 1);
    const auto it = comps_.find(d);
    if (it != comps_.end())
        for (int j = 0; j <= d; ++j)
            if (!it->second[static_cast<std::size_t>(j)].is_zero())
                row.set(0, j, it->second[static_cast<std::size_t>(j)]);
    return row;
}

Poly Poly::from_component_row(const MatrixF& row, int d) {
    Poly p(row.field());
    for (int j = 0; j <= d; ++j) {
        const Scalar c = row.get(0, j);
        if (!c.is_zero()) p.add_term(d - j, j, c);
    }
    return p;
}

Poly Poly::component(int d) const {
    return from_component_row(component_row(d), d);
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_) throw DomainError("field mismatch");
    Poly r = *this;
    for (const auto& [d, comp] : o.comps_)
        for (int j = 0; j <= d; ++j)
            r.add_term(d - j, j, comp[static_cast<std::size_t>(j)]);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_) throw DomainError("field mismatch");
    Poly r(field_);
    for (const auto& [d1, c1] : comps_)
        for (const auto& [d2, c2] : o.comps_)
            for (int i = 0; i <= d1; ++i) {
                if (c1[static_cast<std::size_t>(i)].is_zero()) continue;
                for (int j = 0; j <= d2; ++j) {
                    if (c2[static_cast<std::size_t>(j)].is_zero()) continue;
                    r.add_term(d1 - i + d2 - j, i + j,
                               c1[static_cast<std::size_t>(i)] *
                                   c2[static_cast<std::size_t>(j)]);
                }
            }
    return r;
}

Poly Poly::scaled(Scalar s) const {
    Poly r(field_);
    if (s.is_zero()) return r;
    for (const auto& [d, comp] : comps_)
        for (int j = 0; j <= d; ++j)
            r.add_term(d - j, j, comp[static_cast<std::size_t>(j)] * s);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (field_ != o.field_) return false;
    if (comps_.size() != o.comps_.size()) return false;
    for (const auto& [d, comp] : comps_) {
        const auto it = o.comps_.find(d);
        if (it == o.comps_.end()) return false;
        for (std::size_t j = 0; j < comp.size(); ++j)
            if (!(comp[j] == it->second[j])) return false;
    }
    return true;
}

Poly q_act(int power, const Poly& f) {
    const int p = ((power % 3) + 3) % 3;
    Poly r = f;
    const Field fl = f.field();
    for (int it = 0; it < p; ++it) {
        // substitute x1 -> x1+x2, x2 -> x1
        Poly next(fl);
        const Poly sx1 = Poly::x1(fl) + Poly::x2(fl);
        const Poly sx2 = Poly::x1(fl);
        for (const auto& [d, comp] : r.components())
            for (int j = 0; j <= d; ++j) {
                const Scalar c = comp[static_cast<std::size_t>(j)];
                if (c.is_zero()) continue;
                Poly term = Poly::monomial(fl, 0, 0, c);
                for (int t = 0; t < d - j; ++t) term = term * sx1;
                for (int t = 0; t < j; ++t) term = term * sx2;
                next = next + term;
            }
        r = next;
    }
    return r;
}

MatrixF q_action_matrix(Field f, int power, int d) {
    MatrixF m(f, d + 1, d + 1);
    for (int j = 0; j <= d; ++j) {
        const Poly img = q_act(power, Poly::monomial(f, d - j, j, Scalar::one(f)));
        const MatrixF row = img.component_row(d);
        for (int i = 0; i <= d; ++i) {
            const Scalar v = row.get(0, i);
            if (!v.is_zero()) m.set(i, j, v);
        }
    }
    return m;
}

Poly reynolds(const Poly& f) {
    return f + q_act(1, f) + q_act(2, f);
}

namespace {
// C(n,k) mod 2 by Lucas: odd iff k's bits are a subset of n's.
bool binom_odd(int n, int k) {
    if (k < 0 || k > n) return false;
    return (n & k) == k;
}
}  // namespace

Poly steenrod_sq(int k, const Poly& f) {
    if (k < 0) throw DomainError("negative Steenrod index");
    Poly r(f.field());
    if (f.is_zero()) return r;
    if (!f.is_homogeneous())
        throw DomainError("steenrod_sq needs a homogeneous polynomial");
    const int d = f.degree();
    if (k > d) return r;  // unstable convention: Sq^k f = 0 above the degree
    // Sq(x1^a x2^b) = x1^a (1+x1)^a x2^b (1+x2)^b
    for (int j = 0; j <= d; ++j) {
        const Scalar c = f.coeff(d - j, j);
        if (c.is_zero()) continue;
        const int a = d - j, b = j;
        for (int i = std::max(0, k - b); i <= std::min(a, k); ++i) {
            const int jj = k - i;
            if (binom_odd(a, i) && binom_odd(b, jj))
                r.add_term(a + i, b + jj, c);
        }
    }
    return r;
}

MatrixF mult_x1_matrix(Field f, int d) {
    MatrixF m(f, d + 2, d + 1);
    for (int j = 0; j <= d; ++j) m.set(j, j, Scalar::one(f));
    return m;
}

MatrixF mult_x2_matrix(Field f, int d) {
    MatrixF m(f, d + 2, d + 1);
    for (int j = 0; j <= d; ++j) m.set(j + 1, j, Scalar::one(f));
    return m;
}

namespace {

std::string monomial_str(int e1, int e2) {
    std::ostringstream os;
    if (e1 > 0) {
        os << "x1";
        if (e1 > 1) os << "^" << e1;
    }
    if (e2 > 0) {
        if (e1 > 0) os << "*";
        os << "x2";
        if (e2 > 1) os << "^" << e2;
    }
    if (e1 == 0 && e2 == 0) os << "1";
    return os.str();
}

}  // namespace

std::string print_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    // monomials in decreasing lexicographic order with x1 > x2
    std::vector<std::tuple<int, int, Scalar>> terms;  // (e1, e2, coeff)
    for (const auto& [d, comp] : f.components())
        for (int j = 0; j <= d; ++j) {
            const Scalar c = comp[static_cast<std::size_t>(j)];
            if (!c.is_zero()) terms.emplace_back(d - j, j, c);
        }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b))
            return std::get<0>(a) > std::get<0>(b);
        return std::get<1>(a) > std::get<1>(b);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e1, e2, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << (c.bits() == 2 ? "w*" : "(w+1)*");
        os << monomial_str(e1, e2);
    }
    return os.str();
}

Poly parse_poly(const std::string& text, Field f) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    Poly out(f);
    if (s.empty() || s == "0") return out;

    std::vector<std::string> terms;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == '+' && depth == 0) {
            terms.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    terms.push_back(s.substr(start));

    for (std::string t : terms) {
        if (t.empty()) throw DomainError("empty term in polynomial");
        Scalar coeff = Scalar::one(f);
        if (t.rfind("(w+1)", 0) == 0) {
            coeff = Scalar(f, 3);
            t = t.substr(5);
            if (!t.empty() && t[0] == '*') t = t.substr(1);
        } else if (t[0] == 'w') {
            coeff = Scalar(f, 2);
            t = t.substr(1);
            if (!t.empty() && t[0] == '*') t = t.substr(1);
        }
        int e1 = 0, e2 = 0;
        std::size_t i = 0;
        if (t == "1" || t.empty()) {
            out.add_term(0, 0, coeff);
            continue;
        }
        while (i < t.size()) {
            if (t[i] == '*') {
                ++i;
                continue;
            }
            if (t[i] != 'x' || i + 1 >= t.size() ||
                (t[i + 1] != '1' && t[i + 1] != '2'))
                throw DomainError("bad monomial in polynomial: " + t);
            const bool isx1 = t[i + 1] == '1';
            i += 2;
            int e = 1;
            if (i < t.size() && t[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < t.size() && isdigit(static_cast<unsigned char>(t[j])))
                    ++j;
                if (j == i) throw DomainError("missing exponent: " + t);
                e = std::stoi(t.substr(i, j - i));
                i = j;
            }
            (isx1 ? e1 : e2) += e;
        }
        out.add_term(e1, e2, coeff);
    }
    return out;
}

}  // namespace a4cx
