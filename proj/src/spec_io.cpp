#include "eqd/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace eqd {

namespace {

mpz_class parse_big_int(const json& v, const std::string& where) {
    if (v.is_string()) {
        mpz_class out;
        if (out.set_str(v.get<std::string>(), 10) != 0)
            throw Error(where + ": invalid integer string '" + v.get<std::string>() + "'");
        return out;
    }
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    throw Error(where + ": coefficients must be integers or decimal strings");
}

IntPolynomial parse_poly(const json& arr, const std::string& where) {
    if (!arr.is_array() || arr.empty()) throw Error(where + ": expected a nonempty coefficient array");
    std::vector<mpz_class> cs;
    cs.reserve(arr.size());
    for (const auto& v : arr) cs.push_back(parse_big_int(v, where));
    return IntPolynomial(std::move(cs));
}

}  // namespace

AlgebraicPointSpec parse_point_spec(const json& j, const std::string& name) {
    AlgebraicPointSpec spec;
    spec.name = name;
    const std::string mode = j.value("mode", "primitive");
    if (mode == "primitive")
        spec.mode = PointMode::Primitive;
    else if (mode == "product")
        spec.mode = PointMode::Product;
    else
        throw Error("point spec '" + name + "': unknown mode '" + mode + "'");

    if (spec.mode == PointMode::Primitive) {
        if (!j.contains("primitive_min_poly"))
            throw Error("point spec '" + name + "': primitive mode needs primitive_min_poly");
        spec.primitive_min_poly = parse_poly(j.at("primitive_min_poly"), name + ".primitive_min_poly");
        if (!j.contains("coords")) throw Error("point spec '" + name + "': primitive mode needs coords");
        for (const auto& c : j.at("coords")) {
            IntPolynomial num = parse_poly(c.at("num"), name + ".coords.num");
            mpz_class den = c.contains("den") ? parse_big_int(c.at("den"), name + ".coords.den")
                                              : mpz_class(1);
            spec.coords.emplace_back(std::move(num), std::move(den));
        }
    }
    if (j.contains("coord_min_polys")) {
        for (const auto& p : j.at("coord_min_polys")) {
            if (p.is_null())
                spec.coord_min_polys.emplace_back();
            else
                spec.coord_min_polys.push_back(parse_poly(p, name + ".coord_min_polys"));
        }
    }
    if (j.contains("integral"))
        for (const auto& b : j.at("integral")) spec.coord_is_integer.push_back(b.get<bool>());
    spec.product_degree_asserted = j.value("compositum_degree_is_product", false);
    spec.validate();
    return spec;
}

AlgebraicPointSpec load_point_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open point spec '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw Error("point spec '" + path + "': " + e.what());
    }
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
    return parse_point_spec(j, name);
}

TestFunction parse_function_spec(const json& j, const std::string& name) {
    const std::string kind = j.value("kind", "");
    const int N = j.value("dimension", 0);
    if (N < 1) throw Error("function spec '" + name + "': dimension must be >= 1");
    TestFunction f = TestFunction::constant(1, 0.0);
    if (kind == "constant") {
        f = TestFunction::constant(N, j.at("value").get<double>());
    } else if (kind == "trig_bump") {
        std::vector<TrigTerm> terms;
        for (const auto& t : j.at("terms")) {
            TrigTerm term;
            for (const auto& v : t.at("n")) term.n.push_back(v.get<int>());
            term.cos_coeff = t.value("cos", 0.0);
            term.sin_coeff = t.value("sin", 0.0);
            terms.push_back(std::move(term));
        }
        f = TestFunction::trig_bump(N, std::move(terms), j.value("bump_width", 1.0));
    } else if (kind == "sampled") {
        std::vector<double> samples;
        for (const auto& v : j.at("samples")) samples.push_back(v.get<double>());
        f = TestFunction::sampled(N, j.at("grid").get<int>(), std::move(samples),
                                  j.at("lip").get<double>(), j.value("bump_width", 1.0));
    } else {
        throw Error("function spec '" + name + "': unknown kind '" + kind + "'");
    }
    f.name = name;
    return f;
}

TestFunction load_function_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open function spec '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const std::exception& e) {
        throw Error("function spec '" + path + "': " + e.what());
    }
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name = name.substr(0, dot);
    return parse_function_spec(j, name);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for digesting");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string bytes = ss.str();
    const std::uint64_t h =
        fnv1a({reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size()});
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& inputs) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    json in = json::object();
    for (const auto& [path, digest] : inputs) in[path] = digest;
    j["inputs"] = in;
    return j;
}

json to_json(const HeightReport& rep) {
    json j;
    json per = json::array();
    for (const auto& ch : rep.per_coordinate) {
        json c;
        c["h"] = ch.h;
        c["degree"] = ch.degree;
        c["method"] = height_method_name(ch.method);
        c["mahler"] = ch.mahler;
        if (!ch.note.empty()) c["note"] = ch.note;
        per.push_back(c);
    }
    j["per_coordinate"] = per;
    j["total_h"] = rep.total_h;
    j["provenance"] = rep.provenance;
    return j;
}

json to_json(const GenDegReport& rep) {
    json j;
    j["value"] = rep.value;
    j["witness"] = rep.witness;
    j["search_radius"] = rep.search_radius;
    j["examined"] = rep.examined;
    j["coord_degrees"] = rep.coord_degrees;
    return j;
}

json to_json(const DiscrepancyReport& rep) {
    json j;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["h"] = rep.h;
    j["gendeg"] = rep.gendeg;
    j["c_of_F"] = rep.c_of_f;
    j["orbit_size"] = rep.orbit_size;
    j["t1"] = rep.t1;
    j["t1_bound"] = rep.t1_bound;
    j["t2"] = rep.t2;
    j["t2_bound"] = rep.t2_bound;
    j["t2_pairing"] = rep.t2_pairing;
    j["pairing_tail"] = rep.pairing_tail;
    j["rhs_tight_non_normative"] = rep.rhs_tight;
    j["precondition_h"] = rep.precondition_h;
    if (rep.ok.has_value()) j["ok"] = *rep.ok;
    if (!rep.fallback_1d.empty()) {
        json fb = json::array();
        for (const FrlCheck& chk : rep.fallback_1d)
            fb.push_back({{"function", chk.function_name},
                          {"lhs", chk.lhs},
                          {"rhs", chk.rhs},
                          {"ok", chk.ok}});
        j["fallback_1d"] = fb;
    }
    j["provenance"] = rep.provenance;
    return j;
}

json to_json(const SpectrumTable& table) {
    json j;
    j["dimension"] = table.dimension;
    j["box"] = table.box;
    j["grid"] = table.grid;
    json entries = json::array();
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        const std::complex<double> c = table.entries[k];
        if (std::abs(c) < 1e-15) continue;
        json e;
        e["n"] = table.mode(k);
        e["re"] = c.real();
        e["im"] = c.imag();
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["tail_l1"] = table.tail_l1;
    j["tail_l1_deriv"] = table.tail_l1_deriv;
    return j;
}

json to_json(const DeltaOptimum& opt) {
    json j;
    j["delta"] = opt.delta;
    j["value"] = opt.value;
    return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace eqd
