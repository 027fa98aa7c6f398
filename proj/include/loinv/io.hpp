#pragma once

// File formats.
//
// State file: a JSON document
//   { "n": 2, "m": 2, "convention": "ket" | "monomial",
//     "amplitudes": [ { "occ": [m integers], "re": "p/q", "im": "0" }, ... ] }
// Scalar strings accept the same grammar everywhere: "p/q", integers,
// decimals, and scientific notation.  Unknown fields and duplicate
// occupations are rejected.
//
// Unitary file: a JSON document
//   { "m": 2, "entries": [ { "re": ..., "im": ... } x m*m ] }  (row-major)

#include <loinv/fock.hpp>
#include <loinv/lo_action.hpp>

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace loinv {

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& j, const char* what,
                                  std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok)
            throw std::invalid_argument(std::string(what) + ": unknown field \"" + key + "\"");
    }
    for (const char* a : allowed)
        if (!j.contains(a))
            throw std::invalid_argument(std::string(what) + ": missing field \"" + a + "\"");
}

inline GaussianRational scalar_from_json(const nlohmann::json& rec, const char* what) {
    reject_unknown_fields(rec, what, {"re", "im"});
    if (!rec["re"].is_string() || !rec["im"].is_string())
        throw std::invalid_argument(std::string(what) + ": re/im must be scalar strings");
    return GaussianRational(parse_rational(rec["re"].get<std::string>()),
                            parse_rational(rec["im"].get<std::string>()));
}

template <class S>
S scalar_cast(const GaussianRational& z) {
    if constexpr (scalar_traits<S>::exact) {
        return z;
    } else {
        return z.to_complex();
    }
}

inline std::string float_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <class S>
nlohmann::json scalar_to_json(const S& z) {
    nlohmann::json rec;
    if constexpr (scalar_traits<S>::exact) {
        rec["re"] = to_string(z.re);
        rec["im"] = to_string(z.im);
    } else {
        rec["re"] = float_str(z.real());
        rec["im"] = float_str(z.imag());
    }
    return rec;
}

}  // namespace detail

template <class S>
FockState<S> read_state(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("state file: ") + e.what());
    }
    detail::reject_unknown_fields(j, "state file", {"n", "m", "convention", "amplitudes"});
    if (!j["n"].is_number_integer() || !j["m"].is_number_integer())
        throw std::invalid_argument("state file: n and m must be integers");
    int n = j["n"].get<int>(), m = j["m"].get<int>();
    std::string conv_name = j["convention"].is_string() ? j["convention"].get<std::string>() : "";
    Convention conv;
    if (conv_name == "ket")
        conv = Convention::KET;
    else if (conv_name == "monomial")
        conv = Convention::MONOMIAL;
    else
        throw std::invalid_argument("state file: convention must be \"ket\" or \"monomial\"");
    FockState<S> st(n, m, conv);
    if (!j["amplitudes"].is_array())
        throw std::invalid_argument("state file: amplitudes must be a list");
    std::set<Occupation> seen;
    for (const auto& rec : j["amplitudes"]) {
        detail::reject_unknown_fields(rec, "amplitude record", {"occ", "re", "im"});
        if (!rec["occ"].is_array())
            throw std::invalid_argument("amplitude record: occ must be a list of integers");
        Occupation v;
        for (const auto& x : rec["occ"]) {
            if (!x.is_number_integer())
                throw std::invalid_argument("amplitude record: occ must be a list of integers");
            v.push_back(x.get<int>());
        }
        nlohmann::json scalar_rec;
        scalar_rec["re"] = rec["re"];
        scalar_rec["im"] = rec["im"];
        GaussianRational z = detail::scalar_from_json(scalar_rec, "amplitude record");
        if (!seen.insert(v).second)
            throw std::invalid_argument("state file: duplicate occupation in amplitudes");
        st.set(v, detail::scalar_cast<S>(z));  // validates the occupation
    }
    return st;
}

template <class S>
FockState<S> read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    return read_state<S>(in);
}

template <class S>
void write_state(std::ostream& out, const FockState<S>& st) {
    nlohmann::json j;
    j["n"] = st.n;
    j["m"] = st.m;
    j["convention"] = st.conv == Convention::KET ? "ket" : "monomial";
    j["amplitudes"] = nlohmann::json::array();
    for (const auto& [v, a] : st.amps) {  // map order: deterministic
        nlohmann::json rec = detail::scalar_to_json(a);
        rec["occ"] = v;
        j["amplitudes"].push_back(rec);
    }
    out << j.dump(2) << "\n";
}

template <class S>
ModeUnitary<S> read_unitary(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("unitary file: ") + e.what());
    }
    detail::reject_unknown_fields(j, "unitary file", {"m", "entries"});
    if (!j["m"].is_number_integer())
        throw std::invalid_argument("unitary file: m must be an integer");
    int m = j["m"].get<int>();
    if (m < 1) throw std::invalid_argument("unitary file: need m >= 1");
    if (!j["entries"].is_array() || j["entries"].size() != std::size_t(m) * m)
        throw std::invalid_argument("unitary file: entries must hold m*m records");
    ModeUnitary<S> u(m);
    for (std::size_t i = 0; i < u.a.size(); ++i)
        u.a[i] = detail::scalar_cast<S>(detail::scalar_from_json(j["entries"][i], "unitary entry"));
    return u;
}

template <class S>
ModeUnitary<S> read_unitary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open unitary file: " + path);
    return read_unitary<S>(in);
}

template <class S>
void write_unitary(std::ostream& out, const ModeUnitary<S>& u) {
    nlohmann::json j;
    j["m"] = u.m;
    j["entries"] = nlohmann::json::array();
    for (const auto& z : u.a) j["entries"].push_back(detail::scalar_to_json(z));
    out << j.dump(2) << "\n";
}

}  // namespace loinv
