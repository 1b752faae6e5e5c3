#include "smithles/bundles.hpp"

#include <cctype>
#include <sstream>

#include "smithles/errors.hpp"

namespace smithles::gradedalg {

namespace {

F2Poly sw_class(const std::vector<F2Generator>& cohomology,
                std::vector<std::vector<unsigned>> monomials) {
    // Monomials listed as exponent vectors; the constant term 1 is implied.
    F2Poly p = F2Poly::one(cohomology);
    for (auto& m : monomials) p.toggle(m);
    return p;
}

BaseInfo make_bz2() {
    std::vector<F2Generator> h = {{"a", 1}};
    BaseInfo info{Base::BZ2, "BZ2", h, {}, true};
    info.bundles.push_back({"sigma", 1, sw_class(h, {{1}})});  // w(sigma) = 1 + a
    return info;
}

BaseInfo make_bu1() {
    std::vector<F2Generator> h = {{"c", 2}};
    BaseInfo info{Base::BU1, "BU1", h, {}, true};
    info.bundles.push_back({"L", 2, sw_class(h, {{1}})});  // w(L) = 1 + c
    return info;
}

BaseInfo make_bso3() {
    std::vector<F2Generator> h = {{"w2", 2}, {"w3", 3}};
    // beta(w2) = w3 is nonzero, so no nonzero degree-2 class lifts to Z.
    BaseInfo info{Base::BSO3, "BSO3", h, {}, false};
    info.bundles.push_back({"V3", 3, sw_class(h, {{1, 0}, {0, 1}})});  // 1 + w2 + w3
    return info;
}

BaseInfo make_bsu2() {
    std::vector<F2Generator> h = {{"w4", 4}};
    BaseInfo info{Base::BSU2, "BSU2", h, {}, true};
    info.bundles.push_back({"H", 4, sw_class(h, {{1}})});  // 1 + w4
    return info;
}

}  // namespace

const BaseInfo& base_info(Base b) {
    static const BaseInfo bz2 = make_bz2();
    static const BaseInfo bu1 = make_bu1();
    static const BaseInfo bso3 = make_bso3();
    static const BaseInfo bsu2 = make_bsu2();
    switch (b) {
        case Base::BZ2: return bz2;
        case Base::BU1: return bu1;
        case Base::BSO3: return bso3;
        case Base::BSU2: return bsu2;
    }
    throw ContractError("unknown base");
}

Base base_by_name(const std::string& name) {
    for (Base b : {Base::BZ2, Base::BU1, Base::BSO3, Base::BSU2})
        if (base_info(b).name == name) return b;
    throw UnsupportedCaseError("unsupported base '" + name +
                               "' (supported: BZ2, BU1, BSO3, BSU2)");
}

BundleExpr::BundleExpr(Base base, std::map<std::string, long> coefficients) : base_(base) {
    const BaseInfo& info = base_info(base);
    for (const auto& [name, coeff] : coefficients) {
        bool known = false;
        for (const auto& g : info.bundles)
            if (g.name == name) known = true;
        if (!known)
            throw UnsupportedCaseError("unknown bundle generator '" + name + "' over " +
                                       info.name);
        if (coeff != 0) coeffs_[name] = coeff;
    }
}

long BundleExpr::rank() const {
    const BaseInfo& info = base_info(base_);
    long r = 0;
    for (const auto& [name, coeff] : coeffs_)
        for (const auto& g : info.bundles)
            if (g.name == name) r += coeff * (long)g.rank;
    return r;
}

bool BundleExpr::is_genuine() const {
    if (coeffs_.empty()) return false;
    for (const auto& [_, c] : coeffs_)
        if (c < 0) return false;
    return true;
}

BundleExpr BundleExpr::scaled(long k) const {
    std::map<std::string, long> out;
    if (k != 0)
        for (const auto& [name, c] : coeffs_) out[name] = c * k;
    return BundleExpr(base_, out);
}

BundleExpr BundleExpr::operator+(const BundleExpr& rhs) const {
    if (base_ != rhs.base_) throw ContractError("bundle sum across different bases");
    std::map<std::string, long> out = coeffs_;
    for (const auto& [name, c] : rhs.coeffs_) out[name] += c;
    return BundleExpr(base_, out);
}

BundleExpr BundleExpr::operator-() const { return scaled(-1); }

std::string BundleExpr::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : coeffs_) {
        long a = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (a != 1) os << a << "*";
        os << name;
        first = false;
    }
    return os.str();
}

BundleExpr parse_bundle(Base base, const std::string& text) {
    std::map<std::string, long> coeffs;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(msg, 1, pos + 1);
    };
    skip();
    if (pos >= text.size()) fail("empty bundle expression");
    if (text[pos] == '0' && pos + 1 >= text.size()) return BundleExpr(base);
    bool first = true;
    while (true) {
        skip();
        long sign = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (first && text[pos] == '+') fail("unexpected leading '+'");
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            if (pos >= text.size()) break;
            fail("expected '+' or '-'");
        }
        skip();
        long mult = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            mult = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                mult = mult * 10 + (text[pos++] - '0');
            skip();
            if (pos >= text.size() || text[pos] != '*') fail("expected '*' after coefficient");
            ++pos;
            skip();
        }
        std::string ident;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ident += text[pos++];
        if (ident.empty()) fail("expected a bundle identifier");
        coeffs[ident] += sign * mult;
        first = false;
        skip();
        if (pos >= text.size()) break;
    }
    return BundleExpr(base, coeffs);
}

F2Poly total_sw(const BundleExpr& b, unsigned truncation) {
    if (truncation < 1) throw ContractError("total_sw needs truncation >= 1");
    const BaseInfo& info = base_info(b.base());
    F2Poly acc = F2Poly::one(info.cohomology, truncation);
    for (const auto& [name, coeff] : b.coefficients()) {
        for (const auto& g : info.bundles) {
            if (g.name != name) continue;
            F2Poly w(info.cohomology, truncation);
            w = w + g.total_sw;  // re-truncate the stored class
            acc = acc * w.power(coeff);
        }
    }
    return acc;
}

}  // namespace smithles::gradedalg
