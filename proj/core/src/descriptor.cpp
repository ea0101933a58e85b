#include "gwql/descriptor.hpp"

#include <algorithm>
#include <sstream>

#include "gwql/errors.hpp"

namespace gwql {

using nlohmann::json;
using nlohmann::ordered_json;

void InsertionDescriptor::normalize() {
    while (!h_poly.empty() && h_poly.back().is_zero()) h_poly.pop_back();
    if (h_poly.empty()) h_poly.push_back(Rational(0));
    std::sort(chern_factors.begin(), chern_factors.end());
}

json InsertionDescriptor::to_json() const {
    json j;
    json poly = json::array();
    for (const auto& c : h_poly) poly.push_back(c.to_string());
    j["poly"] = poly;
    j["psi"] = psi_power;
    j["chern"] = chern_factors;
    if (kernel)
        j["kernel"] = json::array({kernel->first.to_string(), kernel->second});
    else
        j["kernel"] = nullptr;
    return j;
}

InsertionDescriptor InsertionDescriptor::from_json(const json& j) {
    InsertionDescriptor ins;
    ins.h_poly.clear();
    for (const auto& c : j.at("poly")) ins.h_poly.push_back(Rational::from_string(c.get<std::string>()));
    ins.psi_power = j.at("psi").get<long>();
    ins.chern_factors = j.at("chern").get<std::vector<int>>();
    if (!j.at("kernel").is_null())
        ins.kernel = {Rational::from_string(j.at("kernel")[0].get<std::string>()),
                      j.at("kernel")[1].get<long>()};
    ins.normalize();
    return ins;
}

void InvariantDescriptor::normalize() {
    for (auto& ins : insertions) ins.normalize();
    std::sort(twists.begin(), twists.end());
    std::sort(insertions.begin(), insertions.end(),
              [](const InsertionDescriptor& a, const InsertionDescriptor& b) {
                  return a.to_json().dump() < b.to_json().dump();
              });
}

json InvariantDescriptor::to_json() const {
    json j;
    j["space"] = "P" + std::to_string(space.N);
    json tw = json::array();
    for (const auto& t : twists)
        tw.push_back(json::array(
            {t.bundle_degree, t.lambda_weight, t.mode == EulerMode::Direct ? "+" : "-"}));
    j["twists"] = tw;
    j["genus"] = genus;
    j["degree"] = degree;
    json ins = json::array();
    for (const auto& i : insertions) ins.push_back(i.to_json());
    j["insertions"] = ins;
    return j;
}

InvariantDescriptor InvariantDescriptor::from_json(const json& j) {
    InvariantDescriptor d;
    d.space = parse_space(j.at("space").get<std::string>());
    for (const auto& t : j.at("twists")) {
        TwistEntry e;
        e.bundle_degree = t[0].get<int>();
        e.lambda_weight = t[1].get<int>();
        std::string m = t[2].get<std::string>();
        if (m != "+" && m != "-") throw InvalidInput("bad twist mode: " + m);
        e.mode = (m == "+") ? EulerMode::Direct : EulerMode::Inverse;
        d.twists.push_back(e);
    }
    d.genus = j.at("genus").get<int>();
    d.degree = j.at("degree").get<int>();
    for (const auto& i : j.at("insertions")) d.insertions.push_back(InsertionDescriptor::from_json(i));
    d.normalize();
    return d;
}

std::string InvariantDescriptor::canonical_key() const {
    InvariantDescriptor d = *this;
    d.normalize();
    return d.to_json().dump();
}

InvariantDescriptor InvariantDescriptor::from_key(const std::string& key) {
    return from_json(json::parse(key));
}

bool InvariantDescriptor::carries_lambda() const {
    for (const auto& t : twists)
        if (t.lambda_weight != 0) return true;
    for (const auto& i : insertions)
        if (i.kernel) return true;
    return false;
}

long InvariantDescriptor::vdim_untwisted() const {
    return (1 - genus) * (space.N - 3) + static_cast<long>(degree) * (space.N + 1) +
           static_cast<long>(insertions.size());
}

SpaceDescriptor parse_space(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'P' && s[0] != 'p'))
        throw InvalidInput("space must look like P<N>: " + s);
    int N = 0;
    try {
        N = std::stoi(s.substr(1));
    } catch (const std::exception&) {
        throw InvalidInput("space must look like P<N>: " + s);
    }
    if (N < 1) throw InvalidInput("need N >= 1");
    return SpaceDescriptor{N};
}

TwistEntry parse_twist(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 2 || parts.size() > 3) throw InvalidInput("twist must be <k>:<±m>[:inv]: " + s);
    TwistEntry t;
    try {
        t.bundle_degree = std::stoi(parts[0]);
        t.lambda_weight = std::stoi(parts[1]);
    } catch (const std::exception&) {
        throw InvalidInput("bad twist: " + s);
    }
    if (parts.size() == 3) {
        if (parts[2] != "inv") throw InvalidInput("bad twist mode (expected 'inv'): " + s);
        t.mode = EulerMode::Inverse;
    }
    return t;
}

std::string twist_to_string(const TwistEntry& t) {
    std::string s = std::to_string(t.bundle_degree) + ":";
    if (t.lambda_weight >= 0) s += "+";
    s += std::to_string(t.lambda_weight);
    if (t.mode == EulerMode::Inverse) s += ":inv";
    return s;
}

namespace {

// Parses polynomials in H like "1", "2H", "-3/2H^2+1", "H^3".
std::vector<Rational> parse_h_poly(const std::string& text) {
    std::vector<Rational> coeffs;
    auto add = [&](size_t deg, const Rational& c) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] += c;
    };
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidInput("empty insertion polynomial");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        std::string num;
        while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) num += s[i++];
        if (i < s.size() && s[i] == '*') ++i;
        Rational c = num.empty() ? Rational(1) : Rational::from_string(num);
        if (sign < 0) c = -c;
        size_t deg = 0;
        if (i < s.size() && (s[i] == 'H' || s[i] == 'h')) {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                if (e.empty()) throw InvalidInput("missing exponent in insertion polynomial");
                deg = static_cast<size_t>(std::stoul(e));
            }
        }
        add(deg, c);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw InvalidInput("cannot parse insertion polynomial: " + text);
    }
    return coeffs;
}

}  // namespace

InsertionDescriptor parse_insertion(const std::string& s) {
    InsertionDescriptor ins;
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.empty()) throw InvalidInput("empty insertion");
    ins.h_poly = parse_h_poly(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        auto eq = p.find('=');
        if (eq == std::string::npos) throw InvalidInput("bad insertion field: " + p);
        std::string kname = p.substr(0, eq), val = p.substr(eq + 1);
        if (kname == "psi") {
            ins.psi_power = std::stol(val);
        } else if (kname == "kernel") {
            auto comma = val.find(',');
            if (comma == std::string::npos)
                throw InvalidInput("kernel needs <c>,<order>: " + p);
            ins.kernel = {Rational::from_string(val.substr(0, comma)),
                          std::stol(val.substr(comma + 1))};
        } else if (kname == "chern") {
            std::stringstream cs(val);
            std::string tok;
            while (std::getline(cs, tok, ',')) ins.chern_factors.push_back(std::stoi(tok));
        } else {
            throw InvalidInput("unknown insertion field: " + kname);
        }
    }
    ins.normalize();
    return ins;
}

std::string insertion_to_string(const InsertionDescriptor& ins) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < ins.h_poly.size(); ++k) {
        if (ins.h_poly[k].is_zero() && ins.h_poly.size() > 1) continue;
        if (!first) os << "+";
        first = false;
        os << ins.h_poly[k].to_string();
        if (k >= 1) os << "H";
        if (k >= 2) os << "^" << k;
    }
    if (ins.psi_power > 0) os << ";psi=" << ins.psi_power;
    if (ins.kernel) os << ";kernel=" << ins.kernel->first.to_string() << "," << ins.kernel->second;
    if (!ins.chern_factors.empty()) {
        os << ";chern=";
        for (size_t i = 0; i < ins.chern_factors.size(); ++i) {
            if (i) os << ",";
            os << ins.chern_factors[i];
        }
    }
    return os.str();
}

ordered_json engine_value_to_json(const LaurentSeries& u) {
    ordered_json j;
    if (u.is_constant()) {
        j["type"] = "rational";
        j["value"] = u.constant_value().to_string();
        return j;
    }
    j["type"] = "laurent";
    ordered_json coeffs = ordered_json::object();
    auto ts = u.terms();  // ascending u-exponent = descending λ-exponent
    std::vector<std::pair<long, std::string>> lam;
    lam.reserve(ts.size());
    for (const auto& [e, c] : ts) lam.emplace_back(-e, c.to_string());
    std::sort(lam.begin(), lam.end());
    for (const auto& [e, v] : lam) coeffs[std::to_string(e)] = v;
    j["coefficients"] = coeffs;
    if (!u.is_exact())
        j["unknown_below"] = -u.truncation_order();  // λ-exponents below this are unknown
    return j;
}

LaurentSeries engine_value_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "rational")
        return LaurentSeries::constant(Rational::from_string(j.at("value").get<std::string>()));
    if (type != "laurent") throw InvalidInput("bad serialized value type: " + type);
    long trunc = LaurentSeries::kExact;
    if (j.contains("unknown_below") && !j.at("unknown_below").is_null())
        trunc = -j.at("unknown_below").get<long>();
    LaurentSeries s = LaurentSeries::zero_truncated(trunc);
    for (const auto& [k, v] : j.at("coefficients").items()) {
        long lam_exp = std::stol(k);
        s += LaurentSeries::monomial(-lam_exp, Rational::from_string(v.get<std::string>()));
    }
    return s;
}

}  // namespace gwql
