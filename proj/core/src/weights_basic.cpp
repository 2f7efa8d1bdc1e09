#include "wlp/errors.hpp"
#include "wlp/weight.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wlp {

// ---------------------------------------------------------------- Salas

DyadicValue eval_salas_z(const Rational& alpha, const BigInt& n) {
    Rational e = -alpha * Rational(wlp::abs(n));
    if (boost::multiprecision::denominator(e) == 1) return DyadicValue::pow2(boost::multiprecision::numerator(e));
    return DyadicValue::from_real(std::exp2(to_double(e)));
}

SalasWeight::SalasWeight(Rational alpha) : Weight(Group::lattice(1)), alpha_(std::move(alpha)) {
    if (alpha_ <= 0) throw ValidationError("salas alpha must be positive, got " + to_string(alpha_));
}

std::string SalasWeight::describe() const { return "salas{alpha=" + to_string(alpha_) + "}"; }

DyadicValue SalasWeight::eval(const GroupElement& g) const {
    group().require(g);
    return eval_salas_z(alpha_, std::get<LatticePoint>(g).coords[0]);
}

bool SalasWeight::exact() const { return boost::multiprecision::denominator(alpha_) == 1; }

std::optional<DeclaredBound> SalasWeight::left_bound(const GroupElement& g) const {
    group().require(g);
    // sup_t 2^(alpha(|t| - |s+t|)) = 2^(alpha |s|) by the triangle inequality, attained at t = -s.
    DyadicValue inv = eval_salas_z(alpha_, std::get<LatticePoint>(g).coords[0]);
    return DeclaredBound{DyadicValue{} / inv, "triangle inequality: |t| - |s+t| <= |s|, equality at t = -s"};
}

std::optional<DeclaredBound> SalasWeight::right_bound(const GroupElement& g) const { return left_bound(g); }

// ---------------------------------------------------------------- Z^2

DyadicValue eval_z2(const LatticePoint& pt) {
    if (pt.dim() != 2) throw UsageError("eval_z2 needs a point of Z^2, got " + to_string(GroupElement(pt)));
    const BigInt& l = pt.coords[0];
    const BigInt& m = pt.coords[1];
    const BigInt abs_m = wlp::abs(m);
    std::optional<BigInt> best;
    BigInt pow = 2;
    // A shell around (+-n, +-2^n) reaches |m| only if 2^n - n <= |m|.
    for (BigInt n = 1; pow - n <= abs_m; ++n, pow *= 2) {
        for (int sign : {1, -1}) {
            BigInt k = std::max(wlp::abs(l - sign * n), wlp::abs(m - sign * pow));
            if (k <= n) {
                BigInt e = k - n;
                if (!best || e < *best) best = e;
            }
        }
    }
    return best ? DyadicValue::pow2(*best) : DyadicValue{};
}

Z2Weight::Z2Weight() : Weight(Group::lattice(2)) {}

DyadicValue Z2Weight::eval(const GroupElement& g) const {
    group().require(g);
    return eval_z2(std::get<LatticePoint>(g));
}

std::optional<DeclaredBound> Z2Weight::left_bound(const GroupElement& g) const {
    group().require(g);
    return DeclaredBound{DyadicValue::pow2(word_length(g)),
                         "log2 w = min(0, min_n(dist_inf(t, centres_n) - n)) is 1-Lipschitz in l-infinity"};
}

std::optional<DeclaredBound> Z2Weight::right_bound(const GroupElement& g) const { return left_bound(g); }

// ---------------------------------------------------------------- table

TableWeight::TableWeight(Group group, std::map<GroupElement, DyadicValue> table, DyadicValue fallback)
    : Weight(std::move(group)), table_(std::move(table)), fallback_(std::move(fallback)) {
    for (const auto& [g, v] : table_) this->group().require(g);
}

std::string TableWeight::describe() const {
    return "table{" + std::to_string(table_.size()) + " entries, fallback=" + fallback_.str() + "}";
}

DyadicValue TableWeight::eval(const GroupElement& g) const {
    group().require(g);
    auto it = table_.find(g);
    return it == table_.end() ? fallback_ : it->second;
}

bool TableWeight::exact() const {
    if (!fallback_.is_exact()) return false;
    for (const auto& [g, v] : table_) {
        if (!v.is_exact()) return false;
    }
    return true;
}

namespace {

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

}  // namespace

std::shared_ptr<TableWeight> TableWeight::parse_csv(const Group& group, std::string_view text, DyadicValue fallback) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool by_exponent = true;
    bool header_seen = false;
    std::map<GroupElement, DyadicValue> table;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto comma = line.rfind(',');
        if (comma == std::string::npos) {
            throw ValidationError("weight table line " + std::to_string(lineno) + ": expected 'element,value'");
        }
        std::string elem = trim(line.substr(0, comma));
        std::string val = trim(line.substr(comma + 1));
        if (!header_seen) {
            header_seen = true;
            if (elem == "element") {
                if (val == "exponent") {
                    by_exponent = true;
                } else if (val == "value") {
                    by_exponent = false;
                } else {
                    throw ValidationError("weight table header must be 'element,exponent' or 'element,value'");
                }
                continue;
            }
        }
        if (elem.size() >= 2 && elem.front() == '"' && elem.back() == '"') elem = elem.substr(1, elem.size() - 2);
        try {
            GroupElement g = parse_element(group, elem);
            DyadicValue v = by_exponent ? DyadicValue::pow2(parse_bigint(val)) : DyadicValue::from_rational(parse_rational(val));
            if (!table.emplace(std::move(g), v).second) {
                throw ValidationError("duplicate element");
            }
        } catch (const std::exception& e) {
            throw ValidationError("weight table line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return std::make_shared<TableWeight>(group, std::move(table), std::move(fallback));
}

std::shared_ptr<TableWeight> TableWeight::load_csv(const Group& group, const std::string& path, DyadicValue fallback) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open weight table '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_csv(group, buf.str(), std::move(fallback));
}

}  // namespace wlp
