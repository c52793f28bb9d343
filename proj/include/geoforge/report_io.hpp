#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "geoforge/naka.hpp"

namespace geoforge {

/// "re+im*i" / "re-im*i" with backend-native part formatting.
template <class S>
std::string complex_str(const typename ScalarTraits<S>::Complex& z) {
    using T = ScalarTraits<S>;
    const S re = T::real(z);
    const S im = T::imag(z);
    const bool negative = im < S{};
    return T::str(re) + (negative ? "-" : "+") + T::str(T::abs(im)) + "*i";
}

inline std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "not-evaluable";
    }
}

namespace detail {

template <class S>
std::string optional_point_str(const std::optional<Point<S>>& p) {
    return p ? str(*p) : std::string("unconstructible");
}

}  // namespace detail

template <class S>
std::string report_text(const NakaReport<S>& r) {
    using T = ScalarTraits<S>;
    std::string out;
    out += "input: " + str(r.input.p1()) + " " + str(r.input.p2()) + " " + str(r.input.p3()) +
           "\n";
    out += "D: " + str(r.naka.d) + "\n";
    out += "E: " + str(r.naka.e) + "\n";
    out += "F: " + str(r.naka.f) + "\n";
    out += "Dp: " + str(r.extended.d_prime) + "\n";
    out += "Ep: " + str(r.extended.e_prime) + "\n";
    out += "Fp: " + str(r.extended.f_prime) + "\n";
    out += "O: " + str(r.aux.o) + "\n";
    out += "Oprime: " + str(r.aux.o_prime) + "\n";
    out += "G: " + str(r.aux.g) + "\n";
    out += "S: " + detail::optional_point_str(r.aux.s) + "\n";
    out += "M: " + detail::optional_point_str(r.aux.m) + "\n";
    out += "N: " + detail::optional_point_str(r.aux.n) + "\n";
    out += "ratio_sq_def: " + T::str(r.ratio_sq_def) + "\n";
    out += "ratio_sq_ext: " + T::str(r.ratio_sq_ext) + "\n";
    out += "areas: (" + T::str(r.areas[0]) + ", " + T::str(r.areas[1]) + ", " +
           T::str(r.areas[2]) + ")\n";
    out += "props:";
    for (const Verdict v : r.props) out += " " + verdict_str(v);
    out += "\n";
    out += "sigma: " + complex_str<S>(r.sigma) + "\n";
    for (const auto& note : r.aux.notes) out += "note: " + note + "\n";
    return out;
}

template <class S>
nlohmann::ordered_json report_json(const NakaReport<S>& r) {
    using T = ScalarTraits<S>;
    nlohmann::ordered_json j;
    j["input"] = {str(r.input.p1()), str(r.input.p2()), str(r.input.p3())};
    j["D"] = str(r.naka.d);
    j["E"] = str(r.naka.e);
    j["F"] = str(r.naka.f);
    j["Dp"] = str(r.extended.d_prime);
    j["Ep"] = str(r.extended.e_prime);
    j["Fp"] = str(r.extended.f_prime);
    j["O"] = str(r.aux.o);
    j["Oprime"] = str(r.aux.o_prime);
    j["G"] = str(r.aux.g);
    const auto opt = [](const std::optional<Point<S>>& p) {
        return p ? nlohmann::ordered_json(str(*p)) : nlohmann::ordered_json(nullptr);
    };
    j["S"] = opt(r.aux.s);
    j["M"] = opt(r.aux.m);
    j["N"] = opt(r.aux.n);
    j["ratio_sq_def"] = T::str(r.ratio_sq_def);
    j["ratio_sq_ext"] = T::str(r.ratio_sq_ext);
    j["areas"] = {T::str(r.areas[0]), T::str(r.areas[1]), T::str(r.areas[2])};
    nlohmann::ordered_json props = nlohmann::ordered_json::array();
    for (const Verdict v : r.props) {
        if (v == Verdict::not_evaluable)
            props.push_back(nullptr);
        else
            props.push_back(v == Verdict::pass);
    }
    j["props"] = props;
    j["sigma"] = complex_str<S>(r.sigma);
    j["notes"] = r.aux.notes;
    return j;
}

}  // namespace geoforge
