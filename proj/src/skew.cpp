#include "a4cx/skew.hpp"

#include <sstream>
#include <vector>

#include "a4cx/errors.hpp"

namespace a4cx {

ExtElem ExtElem::one(Field f) {
    ExtElem e(f);
    e.c[0] = Scalar::one(f);
    return e;
}

ExtElem ExtElem::basis(Field f, int k) {
    ExtElem e(f);
    e.c[static_cast<std::size_t>(k)] = Scalar::one(f);
    return e;
}

bool ExtElem::is_zero() const {
    for (const auto& s : c)
        if (!s.is_zero()) return false;
    return true;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    ExtElem r(field);
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

// (a0 + a1 y1 + a2 y2 + a12 y1y2)(b0 + ...) with y_i^2 = 0, y1y2 = y2y1.
ExtElem ExtElem::operator*(const ExtElem& o) const {
    if (field != o.field) throw DomainError("field mismatch");
    ExtElem r(field);
    r.c[0] = c[0] * o.c[0];
    r.c[1] = c[0] * o.c[1] + c[1] * o.c[0];
    r.c[2] = c[0] * o.c[2] + c[2] * o.c[0];
    r.c[3] = c[0] * o.c[3] + c[3] * o.c[0] + c[1] * o.c[2] + c[2] * o.c[1];
    return r;
}

ExtElem ExtElem::scaled(Scalar s) const {
    ExtElem r(field);
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] * s;
    return r;
}

ExtElem psi(int power, const ExtElem& a) {
    ExtElem r = a;
    for (int it = 0; it < ((power % 3) + 3) % 3; ++it) {
        // 1 -> 1, y1 -> y2, y2 -> y1+y2, y1y2 -> y1y2
        ExtElem n(r.field);
        n.c[0] = r.c[0];
        n.c[1] = r.c[2];
        n.c[2] = r.c[1] + r.c[2];
        n.c[3] = r.c[3];
        r = n;
    }
    return r;
}

SkewElem SkewElem::unit(Field f, GroupTag g) {
    SkewElem e(f, g);
    e.part[0] = ExtElem::one(f);
    return e;
}

SkewElem SkewElem::basis(Field f, GroupTag g, int k) {
    SkewElem e(f, g);
    e.part[static_cast<std::size_t>(k / 4)] = ExtElem::basis(f, k % 4);
    return e;
}

bool SkewElem::is_zero() const {
    return part[0].is_zero() && part[1].is_zero() && part[2].is_zero();
}

SkewElem SkewElem::operator+(const SkewElem& o) const {
    if (field != o.field || group != o.group)
        throw DomainError("skew add mismatch");
    SkewElem r(field, group);
    for (int i = 0; i < 3; ++i) r.part[i] = part[i] + o.part[i];
    return r;
}

// (a qbar^i)(b qbar^j) = a Psi(q^i)(b) qbar^(i+j)
SkewElem SkewElem::operator*(const SkewElem& o) const {
    if (field != o.field || group != o.group)
        throw DomainError("skew mul mismatch");
    SkewElem r(field, group);
    const int n = group_order(group);
    for (int i = 0; i < n; ++i) {
        if (part[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (o.part[j].is_zero()) continue;
            const int k = (i + j) % n;
            r.part[k] = r.part[k] + part[i] * psi(i, o.part[j]);
        }
    }
    return r;
}

Scalar augment(const SkewElem& a) {
    Scalar s = Scalar::zero(a.field);
    for (int i = 0; i < group_order(a.group); ++i) s = s + a.part[i].aug();
    return s;
}

int skew_dim(Field, GroupTag g) { return 4 * group_order(g); }

MatrixF right_mult_matrix(const SkewElem& a) {
    const int n = skew_dim(a.field, a.group);
    MatrixF m(a.field, n, n);
    for (int k = 0; k < n; ++k) {
        const SkewElem prod = SkewElem::basis(a.field, a.group, k) * a;
        for (int i = 0; i < group_order(a.group); ++i)
            for (int j = 0; j < 4; ++j) {
                const Scalar v = prod.part[i].c[static_cast<std::size_t>(j)];
                if (!v.is_zero()) m.set(4 * i + j, k, v);
            }
    }
    return m;
}

namespace {

const char* lambda_monomial_name(int j) {
    switch (j) {
        case 0: return "1";
        case 1: return "y1";
        case 2: return "y2";
        default: return "y1*y2";
    }
}

const char* group_power_name(int i) {
    switch (i) {
        case 0: return "e";
        case 1: return "q";
        default: return "q^2";
    }
}

std::string coeff_prefix(Scalar s) {
    if (s.is_one()) return "";
    if (s.bits() == 2) return "w*";
    return "(w+1)*";
}

}  // namespace

std::string print_skew(const SkewElem& a) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < group_order(a.group); ++i)
        for (int j = 0; j < 4; ++j) {
            const Scalar v = a.part[i].c[static_cast<std::size_t>(j)];
            if (v.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << coeff_prefix(v) << lambda_monomial_name(j) << "."
               << group_power_name(i);
        }
    return first ? "0" : os.str();
}

SkewElem parse_skew(const std::string& text, Field f, GroupTag g) {
    SkewElem out(f, g);
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "0" || s.empty()) return out;

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
        Scalar coeff = Scalar::one(f);
        if (t.rfind("(w+1)*", 0) == 0) {
            coeff = Scalar(f, 3);
            t = t.substr(6);
        } else if (t.rfind("w*", 0) == 0) {
            coeff = Scalar(f, 2);
            t = t.substr(2);
        }
        const auto dot = t.rfind('.');
        if (dot == std::string::npos)
            throw DomainError("skew term missing group part: " + t);
        const std::string mono = t.substr(0, dot);
        const std::string grp = t.substr(dot + 1);
        int j;
        if (mono == "1")
            j = 0;
        else if (mono == "y1")
            j = 1;
        else if (mono == "y2")
            j = 2;
        else if (mono == "y1*y2")
            j = 3;
        else
            throw DomainError("bad exterior monomial: " + mono);
        int i;
        if (grp == "e")
            i = 0;
        else if (grp == "q")
            i = 1;
        else if (grp == "q^2")
            i = 2;
        else
            throw DomainError("bad group power: " + grp);
        if (i >= group_order(g))
            throw DomainError("group power outside group");
        out.part[i].c[static_cast<std::size_t>(j)] =
            out.part[i].c[static_cast<std::size_t>(j)] + coeff;
    }
    return out;
}

std::array<Scalar, 4> fp_mul(Field f, const std::array<Scalar, 4>& x,
                             const std::array<Scalar, 4>& y) {
    // basis (1, f1, f2, f1f2); multiplication table of (Z/2)^2
    auto z = std::array<Scalar, 4>{Scalar::zero(f), Scalar::zero(f),
                                   Scalar::zero(f), Scalar::zero(f)};
    static constexpr int table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const int k = table[i][j];
            z[k] = z[k] + x[static_cast<std::size_t>(i)] *
                              y[static_cast<std::size_t>(j)];
        }
    return z;
}

std::array<Scalar, 4> lambda_to_group_algebra(const ExtElem& a) {
    const Field f = a.field;
    const Scalar o = Scalar::one(f), z = Scalar::zero(f);
    // images of (1, y1, y2, y1y2) over (1, f1, f2, f1f2)
    const std::array<Scalar, 4> img[4] = {
        {o, z, z, z},   // 1
        {z, z, o, o},   // y1 -> l1 + l1l2 = f2 + f1f2
        {z, o, z, o},   // y2 -> l2 + l1l2 = f1 + f1f2
        {o, o, o, o}};  // y1y2 -> l1l2
    auto out = std::array<Scalar, 4>{z, z, z, z};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            out[i] = out[i] + img[k][static_cast<std::size_t>(i)] *
                                  a.c[static_cast<std::size_t>(k)];
    return out;
}

std::array<Scalar, 4> fp_conj_q(Field f, const std::array<Scalar, 4>& x) {
    // 1 -> 1, f1 -> f2, f2 -> f1f2, f1f2 -> f1
    return {x[0], x[3], x[1], x[2]};
}

}  // namespace a4cx
