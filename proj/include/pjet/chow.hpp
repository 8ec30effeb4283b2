#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pjet/errors.hpp"
#include "pjet/numeric.hpp"
#include "pjet/variable.hpp"

namespace pjet {

// A formal divisor class symbol. "theta" is conventionally the theta
// divisor of the ambient abelian variety; "h1".."hc" the hypersurface
// classes of a complete intersection.
struct DivisorSymbol {
    std::string name;

    explicit DivisorSymbol(std::string n) : name(std::move(n)) {
        if (!Variable::valid_name(name)) {
            throw InvalidInput("invalid divisor symbol '" + name +
                               "': expected [a-zA-Z][a-zA-Z0-9]*");
        }
    }

    friend bool operator==(const DivisorSymbol& a, const DivisorSymbol& b) = default;
};

// The formal ambient: an abelian variety of dimension n together with the
// divisor symbols cycle classes may mention. Symbol order is canonical for
// printing and for table keys.
struct AmbientSpec {
    unsigned n = 0;
    std::vector<DivisorSymbol> symbols;

    AmbientSpec(unsigned dim, std::vector<DivisorSymbol> syms)
        : n(dim), symbols(std::move(syms)) {
        if (n < 1) throw InvalidInput("ambient dimension must be >= 1");
        std::set<std::string> seen;
        for (const auto& s : symbols) {
            if (!seen.insert(s.name).second) {
                throw InvalidInput("duplicate divisor symbol '" + s.name + "'");
            }
        }
    }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < symbols.size(); ++i)
            if (symbols[i].name == name) return i;
        return std::nullopt;
    }

    std::size_t require_index(const std::string& name) const {
        if (auto i = index_of(name)) return *i;
        throw AmbientMismatch("divisor symbol '" + name + "' is not part of the ambient");
    }

    friend bool operator==(const AmbientSpec& a, const AmbientSpec& b) = default;
};

namespace detail {

// Exponent vector aligned with AmbientSpec::symbols.
using SymMonomial = std::vector<std::uint32_t>;

inline unsigned codim(const SymMonomial& m) {
    unsigned c = 0;
    for (auto e : m) c += e;
    return c;
}

inline std::string sym_monomial_str(const AmbientSpec& ambient, const SymMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ambient.symbols[i].name;
        if (m[i] >= 2) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

// Parses a table key like "theta*h1^2" into an exponent vector.
inline SymMonomial parse_sym_monomial(const AmbientSpec& ambient, const std::string& key) {
    SymMonomial m(ambient.symbols.size(), 0);
    if (key == "1") return m;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t star = key.find('*', pos);
        std::string factor = key.substr(pos, star == std::string::npos ? star : star - pos);
        std::string name = factor;
        std::uint32_t exp = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string digits = factor.substr(caret + 1);
            if (digits.empty() || digits.size() > 9 ||
                digits.find_first_not_of("0123456789") != std::string::npos) {
                throw InvalidInput("bad exponent in monomial key '" + key + "'");
            }
            exp = static_cast<std::uint32_t>(std::stoul(digits));
        }
        auto idx = ambient.index_of(name);
        if (!idx) {
            throw InvalidInput("unknown divisor symbol '" + name + "' in monomial key '" + key +
                               "'");
        }
        m[*idx] += exp;
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return m;
}

} // namespace detail

// A graded element of the formal Chow ring: an integer combination of
// monomials in the divisor symbols, graded by codimension. Products drop
// everything above codimension n, where the ring vanishes.
class CycleClass {
public:
    using Terms = std::map<detail::SymMonomial, BigInt, std::greater<detail::SymMonomial>>;

    static CycleClass zero(const AmbientSpec& ambient) { return CycleClass(ambient); }

    static CycleClass one(const AmbientSpec& ambient) {
        CycleClass c(ambient);
        c.terms_.emplace(detail::SymMonomial(ambient.symbols.size(), 0), 1);
        return c;
    }

    static CycleClass symbol(const AmbientSpec& ambient, const std::string& name) {
        CycleClass c(ambient);
        detail::SymMonomial m(ambient.symbols.size(), 0);
        m[ambient.require_index(name)] = 1;
        c.terms_.emplace(std::move(m), 1);
        return c;
    }

    static CycleClass term(const AmbientSpec& ambient, const detail::SymMonomial& m,
                           const BigInt& coeff) {
        CycleClass c(ambient);
        if (m.size() != ambient.symbols.size()) {
            throw InvalidInput("monomial arity does not match the ambient symbol list");
        }
        if (coeff != 0 && detail::codim(m) <= ambient.n) c.terms_.emplace(m, coeff);
        return c;
    }

    const AmbientSpec& ambient() const noexcept { return ambient_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    BigInt coefficient(const detail::SymMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool is_one() const {
        return terms_.size() == 1 && detail::codim(terms_.begin()->first) == 0 &&
               terms_.begin()->second == 1;
    }

    // Largest codimension with a nonzero term; -1 for the zero class.
    int max_codimension() const {
        int c = -1;
        for (const auto& [m, v] : terms_) c = std::max(c, static_cast<int>(detail::codim(m)));
        return c;
    }

    bool is_homogeneous_of(unsigned codim) const {
        for (const auto& [m, v] : terms_)
            if (detail::codim(m) != codim) return false;
        return true;
    }

    // The pure codimension-i part.
    CycleClass component(unsigned codim) const {
        CycleClass r(ambient_);
        for (const auto& [m, v] : terms_)
            if (detail::codim(m) == codim) r.terms_.emplace(m, v);
        return r;
    }

    CycleClass& operator+=(const CycleClass& o) {
        require_same_ambient(o);
        for (const auto& [m, v] : o.terms_) add_term(m, v);
        return *this;
    }

    CycleClass& operator-=(const CycleClass& o) {
        require_same_ambient(o);
        for (const auto& [m, v] : o.terms_) add_term(m, -v);
        return *this;
    }

    friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
    friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }

    friend CycleClass operator*(const CycleClass& a, const CycleClass& b) {
        a.require_same_ambient(b);
        CycleClass r(a.ambient_);
        const unsigned n = a.ambient_.n;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                detail::SymMonomial m(ma.size());
                unsigned c = 0;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = ma[i] + mb[i];
                    c += m[i];
                }
                if (c > n) continue; // codimension beyond the ambient vanishes
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    CycleClass& operator*=(const CycleClass& o) { return *this = *this * o; }

    CycleClass& operator*=(const BigInt& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, v] : terms_) v *= c;
        }
        return *this;
    }

    friend CycleClass operator*(CycleClass a, const BigInt& c) { return a *= c; }
    friend CycleClass operator*(const BigInt& c, CycleClass a) { return a *= c; }

    friend bool operator==(const CycleClass& a, const CycleClass& b) {
        return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt a = c;
            if (first) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
                first = false;
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string mono = detail::sym_monomial_str(ambient_, m);
            if (mono == "1") {
                s += a.str();
            } else if (a == 1) {
                s += mono;
            } else {
                s += a.str() + "*" + mono;
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycleClass& c) {
        return os << c.str();
    }

private:
    explicit CycleClass(const AmbientSpec& ambient) : ambient_(ambient) {}

    void require_same_ambient(const CycleClass& o) const {
        if (!(ambient_ == o.ambient_)) {
            throw AmbientMismatch("cycle classes live over different ambients");
        }
    }

    void add_term(const detail::SymMonomial& m, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    AmbientSpec ambient_;
    Terms terms_;
};

// A truncated total characteristic class: components sigma_0..sigma_N with
// sigma_i of pure codimension i. Chern and Segre series are both of this
// shape; a total Segre series is the inverse of the corresponding total
// Chern series, so signs alternate through inversion rather than being
// tracked separately.
class ChernSeries {
public:
    ChernSeries(const AmbientSpec& ambient, unsigned truncation)
        : ambient_(ambient), components_(truncation + 1, CycleClass::zero(ambient)) {}

    static ChernSeries one(const AmbientSpec& ambient, unsigned truncation) {
        ChernSeries s(ambient, truncation);
        s.components_[0] = CycleClass::one(ambient);
        return s;
    }

    const AmbientSpec& ambient() const noexcept { return ambient_; }
    unsigned truncation() const noexcept { return static_cast<unsigned>(components_.size()) - 1; }

    const CycleClass& component(unsigned i) const {
        if (i >= components_.size()) throw InvalidInput("series component out of range");
        return components_[i];
    }

    void set_component(unsigned i, CycleClass cls) {
        if (i >= components_.size()) throw InvalidInput("series component out of range");
        if (!(cls.ambient() == ambient_)) {
            throw AmbientMismatch("series component lives over a different ambient");
        }
        if (!cls.is_homogeneous_of(i)) {
            throw InvalidInput("series component " + std::to_string(i) +
                               " is not homogeneous of codimension " + std::to_string(i));
        }
        components_[i] = std::move(cls);
    }

    friend bool operator==(const ChernSeries& a, const ChernSeries& b) {
        return a.ambient_ == b.ambient_ && a.components_ == b.components_;
    }

private:
    AmbientSpec ambient_;
    std::vector<CycleClass> components_;
};

// Graded product truncated at the common truncation length.
inline ChernSeries whitney_product(const ChernSeries& a, const ChernSeries& b) {
    if (!(a.ambient() == b.ambient())) {
        throw AmbientMismatch("whitney_product: series live over different ambients");
    }
    if (a.truncation() != b.truncation()) {
        throw AmbientMismatch("whitney_product: series have different truncation lengths");
    }
    ChernSeries r(a.ambient(), a.truncation());
    for (unsigned i = 0; i <= r.truncation(); ++i) {
        CycleClass acc = CycleClass::zero(a.ambient());
        for (unsigned j = 0; j <= i; ++j) acc += a.component(j) * b.component(i - j);
        r.set_component(i, std::move(acc));
    }
    return r;
}

// Multiplicative inverse up to truncation: t_0 = 1 and
// t_i = -sum_{j=1..i} s_j * t_{i-j}. Requires unit constant term.
inline ChernSeries invert_series(const ChernSeries& s) {
    if (!s.component(0).is_one()) {
        throw InvalidSeries("invert_series: constant term must be the fundamental class 1");
    }
    ChernSeries t = ChernSeries::one(s.ambient(), s.truncation());
    for (unsigned i = 1; i <= s.truncation(); ++i) {
        CycleClass acc = CycleClass::zero(s.ambient());
        for (unsigned j = 1; j <= i; ++j) acc += s.component(j) * t.component(i - j);
        t.set_component(i, acc * BigInt(-1));
    }
    return t;
}

// Pullback along Frobenius: divisor classes scale by p, so the
// codimension-i component scales by p^i (splitting principle).
inline ChernSeries frobenius_pullback(const ChernSeries& s, std::uint64_t p) {
    ChernSeries r(s.ambient(), s.truncation());
    BigInt scale = 1;
    for (unsigned i = 0; i <= s.truncation(); ++i) {
        r.set_component(i, s.component(i) * scale);
        scale *= p;
    }
    return r;
}

// Segre series of the Frobenius pullback of the cotangent bundle of a
// smooth complete intersection X of the hypersurfaces inside an abelian
// variety: the ambient cotangent bundle is trivial, so the conormal
// sequence gives s(Omega^1_X) = prod_j (1 - h_j), and Frobenius pullback
// scales each h_j by p. Truncated at d = n - c = dim X.
inline ChernSeries ci_cotangent_segre(const AmbientSpec& ambient,
                                      const std::vector<DivisorSymbol>& hyps, std::uint64_t p,
                                      std::optional<unsigned> truncation = {}) {
    const unsigned c = static_cast<unsigned>(hyps.size());
    if (c > ambient.n) {
        throw InvalidInput("ci_cotangent_segre: more hypersurfaces than the ambient dimension");
    }
    const unsigned d = ambient.n - c;
    if (truncation && *truncation != d) {
        throw InvalidInput("ci_cotangent_segre: truncation must equal n - c = " +
                           std::to_string(d));
    }
    ChernSeries s = ChernSeries::one(ambient, d);
    for (const DivisorSymbol& h : hyps) {
        CycleClass ph = CycleClass::symbol(ambient, h.name) * BigInt(p);
        // multiply by the linear factor (1 - p*h), highest component first
        for (unsigned i = d; i >= 1; --i) {
            s.set_component(i, s.component(i) - s.component(i - 1) * ph);
        }
    }
    return s;
}

// The intersection numbers of top-degree monomials in the divisor symbols.
// Supplied by the user; lookups of absent keys are hard errors so a thin
// table can never silently zero out part of a bound.
class IntersectionTable {
public:
    explicit IntersectionTable(const AmbientSpec& ambient) : ambient_(ambient) {}

    const AmbientSpec& ambient() const noexcept { return ambient_; }

    void set(const std::string& monomial_key, const BigInt& value) {
        auto m = detail::parse_sym_monomial(ambient_, monomial_key);
        if (detail::codim(m) != ambient_.n) {
            throw InvalidInput("intersection-table key '" + monomial_key +
                               "' does not have codimension " + std::to_string(ambient_.n));
        }
        numbers_[std::move(m)] = value;
    }

    BigInt lookup(const detail::SymMonomial& m) const {
        auto it = numbers_.find(m);
        if (it == numbers_.end()) {
            std::string key = detail::sym_monomial_str(ambient_, m);
            throw MissingIntersectionNumber(
                "intersection number for '" + key + "' is missing from the table", key);
        }
        return it->second;
    }

    const std::map<detail::SymMonomial, BigInt, std::greater<detail::SymMonomial>>& numbers()
        const noexcept {
        return numbers_;
    }

private:
    AmbientSpec ambient_;
    std::map<detail::SymMonomial, BigInt, std::greater<detail::SymMonomial>> numbers_;
};

// Degree of a top-codimension class: the linear extension of the table.
inline BigInt evaluate(const CycleClass& cls, const IntersectionTable& table) {
    if (!(cls.ambient() == table.ambient())) {
        throw AmbientMismatch("evaluate: class and table live over different ambients");
    }
    if (!cls.is_homogeneous_of(cls.ambient().n)) {
        throw InvalidInput("evaluate: class is not homogeneous of top codimension " +
                           std::to_string(cls.ambient().n));
    }
    BigInt sum = 0;
    for (const auto& [m, c] : cls.terms()) sum += c * table.lookup(m);
    return sum;
}

// Pushforward of a class on the complete intersection to the ambient ring:
// multiplication with the class of X, the product of the hypersurfaces.
inline CycleClass restrict_to_ci(const CycleClass& cls, const std::vector<DivisorSymbol>& hyps) {
    const unsigned n = cls.ambient().n;
    const int codim = cls.max_codimension();
    if (codim >= 0 && static_cast<unsigned>(codim) + hyps.size() > n) {
        throw InvalidInput("restrict_to_ci: codimension would exceed the ambient dimension");
    }
    CycleClass r = cls;
    for (const DivisorSymbol& h : hyps) r *= CycleClass::symbol(cls.ambient(), h.name);
    return r;
}

} // namespace pjet
