#include "symspec/domain.hpp"

#include "symspec/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symspec {

std::string to_string(CartanType type)
{
    switch (type) {
    case CartanType::I: return "I";
    case CartanType::II: return "II";
    case CartanType::III: return "III";
    case CartanType::IV: return "IV";
    case CartanType::V: return "V";
    case CartanType::VI: return "VI";
    }
    return "?";
}

std::string to_string(const CartanLabel& label)
{
    const auto head = to_string(label.type);
    switch (label.type) {
    case CartanType::I:
        return head + "(" + std::to_string(label.first) + "," + std::to_string(label.second) + ")";
    case CartanType::II:
    case CartanType::III:
    case CartanType::IV:
        return head + "(" + std::to_string(label.first) + ")";
    case CartanType::V:
    case CartanType::VI:
        return head;
    }
    return head;
}

std::optional<CartanType> parse_cartan_type(const std::string& text)
{
    static const std::map<std::string, CartanType> names = {
        {"I", CartanType::I},   {"II", CartanType::II}, {"III", CartanType::III},
        {"IV", CartanType::IV}, {"V", CartanType::V},   {"VI", CartanType::VI},
    };
    auto it = names.find(text);
    if (it == names.end())
        return std::nullopt;
    return it->second;
}

std::string DomainParams::name() const
{
    if (label)
        return to_string(*label);
    return "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",r=" + std::to_string(r) + ")";
}

DomainParams make_domain(int a, int b, int r)
{
    if (r < 1)
        throw DomainError("rank r must be at least 1, got " + std::to_string(r));
    if (a < 0 || b < 0)
        throw DomainError("multiplicities a and b must be nonnegative");
    if (r == 1)
        a = 1;
    else if (a == 0)
        throw DomainError("a = 0 with rank >= 2 is a polydisc, not an irreducible domain");

    DomainParams domain;
    domain.a = a;
    domain.b = b;
    domain.r = r;

    // a r (r-1) is even since r (r-1) is
    const long twice_d = 2L * r + static_cast<long>(a) * r * (r - 1) + 2L * b * r;
    if (twice_d % 2 != 0)
        throw InternalError("odd value of 2d");
    domain.d = static_cast<int>(twice_d / 2);
    domain.genus = 2 + a * (r - 1) + b;
    domain.rho = 1 + Rational(a, 2) * (r - 1) + b;
    return domain;
}

DomainParams make_domain(const CartanLabel& label)
{
    auto fail = [&](const std::string& why) {
        throw DomainError("invalid Cartan label " + to_string(label) + ": " + why);
    };

    DomainParams domain;
    switch (label.type) {
    case CartanType::I: {
        const int r = label.first;
        const int s = label.second;
        if (r < 1 || s < r)
            fail("type I(r,s) needs 1 <= r <= s");
        domain = make_domain(2, s - r, r);
        break;
    }
    case CartanType::II: {
        const int n = label.first;
        if (n < 4)
            fail("type II(n) needs n >= 4");
        const int eps = n % 2;
        domain = make_domain(4, 2 * eps, n / 2);
        break;
    }
    case CartanType::III: {
        const int r = label.first;
        if (r < 2)
            fail("type III(r) needs r >= 2");
        domain = make_domain(1, 0, r);
        break;
    }
    case CartanType::IV: {
        const int s = label.first;
        if (s < 4)
            fail("type IV(s) needs s >= 4");
        domain = make_domain(s - 2, 0, 2);
        break;
    }
    case CartanType::V:
        domain = make_domain(6, 4, 2);
        break;
    case CartanType::VI:
        domain = make_domain(8, 0, 3);
        break;
    }
    domain.label = label;
    return domain;
}

std::vector<Rational> f_set_generators(const DomainParams& domain)
{
    // residue class (fractional part) -> largest member
    std::map<Rational, Rational> best;
    for (int l = 1; l <= domain.r; ++l) {
        const Rational value = domain.half_a() * (l - 1);
        const Rational residue = value - Rational(floor(value));
        auto [it, inserted] = best.emplace(residue, value);
        if (!inserted && it->second < value)
            it->second = value;
    }
    std::vector<Rational> out;
    for (const auto& [residue, value] : best)
        out.push_back(value);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

// "base" shifted by gamma: base, base+1/2, base-1/3
std::string plus_gamma(const std::string& base, const Rational& gamma)
{
    if (gamma == 0)
        return base;
    if (gamma > 0)
        return base + "+" + to_string(gamma);
    return base + "-" + to_string(Rational(-gamma));
}

std::string threshold(const std::string& numerator, const std::string& genus, const Rational& gamma)
{
    const bool compound = numerator.find_first_of("+-") != std::string::npos;
    const std::string top = compound ? "(" + numerator + ")" : numerator;
    return "p > " + top + "/(" + plus_gamma(genus, gamma) + "-alpha)";
}

std::string b_gamma(const std::string& genus, const Rational& gamma)
{
    return "(-inf, " + plus_gamma(genus, gamma) + ") \\ F";
}

}  // namespace

std::vector<TableRow> classification_table(const Rational& gamma)
{
    if (gamma <= -1)
        throw NotApplicable("gamma_out_of_range", "weight gamma must exceed -1, got " + to_string(gamma));

    std::vector<TableRow> rows;
    rows.push_back({CartanType::I, "C^{r x s}, r<=s", "rs", "2", "s-r", "r", "r+s",
                    "{r-1-k : k>=0}", b_gamma("r+s", gamma), threshold("r+s-1", "r+s", gamma)});
    rows.push_back({CartanType::II, "C^{(2r+e) x (2r+e)}_asym, e in {0,1}", "r(2r+2e-1)", "4", "2e", "r",
                    "4r+2e-2", "{2r-2-k : k>=0}", b_gamma("4r+2e-2", gamma),
                    threshold("4r+2e-3", "4r+2e-2", gamma)});
    rows.push_back({CartanType::III, "C^{r x r}_sym", "r(r+1)/2", "1", "0", "r", "r+1",
                    "{(r-1)/2-k, (r-2)/2-k : k>=0}", b_gamma("r+1", gamma), threshold("r", "r+1", gamma)});
    rows.push_back({CartanType::IV, "C^{s x s}_spin", "s", "s-2", "0", "2", "s", "{(s-2)/2-k, -k : k>=0}",
                    b_gamma("s", gamma), threshold("s-1", "s", gamma)});
    rows.push_back({CartanType::V, "O_C^{1 x 2}", "16", "6", "4", "2", "12", "{3-k : k>=0}",
                    b_gamma("12", gamma), threshold("11", "12", gamma)});
    rows.push_back({CartanType::VI, "H_3(O) (x) C", "27", "8", "0", "3", "18", "{8-k : k>=0}",
                    b_gamma("18", gamma), threshold("17", "18", gamma)});
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows)
{
    std::ostringstream out;
    out << "type | ambient | d | a | b | r | N | F | B_gamma | S_p\n";
    for (const auto& row : rows) {
        out << to_string(row.type) << " | " << row.ambient << " | " << row.d << " | " << row.a << " | "
            << row.b << " | " << row.r << " | " << row.genus << " | " << row.f_description << " | "
            << row.b_gamma_description << " | " << row.schatten_condition << "\n";
    }
    return out.str();
}

}  // namespace symspec
