#include "hermlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hermlab {

using nlohmann::json;

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open for writing: " + path);
    out << text;
    if (!out) fail("write failed: " + path);
}

std::string coeffs_to_json(const HermiteCoeffs& c) {
    json j;
    j["d"] = c.d;
    j["N"] = c.N;
    json entries = json::array();
    for (const auto& [a, v] : c.entries) {
        json e;
        e["alpha"] = a;
        e["re"] = v.real();
        e["im"] = v.imag();
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j.dump();
}

HermiteCoeffs coeffs_from_json(const std::string& text) {
    json j = json::parse(text);
    HermiteCoeffs c(j.at("d").get<int>(), j.at("N").get<int>());
    for (const auto& e : j.at("entries")) {
        MultiIndex a = e.at("alpha").get<MultiIndex>();
        c.set(a, cplx{e.at("re").get<double>(), e.at("im").get<double>()});
    }
    return c;
}

std::string field_to_json(const GridField& f) {
    json j;
    j["d"] = f.grid.d;
    j["L"] = f.grid.L;
    j["n"] = f.grid.n;
    json vals = json::array();
    for (const auto& v : f.values) vals.push_back(json::array({v.real(), v.imag()}));
    j["values"] = std::move(vals);
    return j.dump();
}

GridField field_from_json(const std::string& text) {
    json j = json::parse(text);
    Grid g(j.at("d").get<int>(), j.at("L").get<double>(), j.at("n").get<int>());
    GridField f(g);
    const auto& vals = j.at("values");
    require(vals.size() == f.values.size(), "field_from_json: values length mismatch");
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = cplx{vals[i].at(0).get<double>(), vals[i].at(1).get<double>()};
    return f;
}

std::string phase_field_to_json(const PhasePlaneField& f) {
    json j;
    j["axes"] = json::array({"x1", "y1"});
    j["Lx"] = f.grid.Lx;
    j["Ly"] = f.grid.Ly;
    j["nx"] = f.grid.nx;
    j["ny"] = f.grid.ny;
    json vals = json::array();
    for (const auto& v : f.values) vals.push_back(json::array({v.real(), v.imag()}));
    j["values"] = std::move(vals);
    return j.dump();
}

PhasePlaneField phase_field_from_json(const std::string& text) {
    json j = json::parse(text);
    PhaseGrid g;
    g.Lx = j.at("Lx").get<double>();
    g.Ly = j.at("Ly").get<double>();
    g.nx = j.at("nx").get<int>();
    g.ny = j.at("ny").get<int>();
    PhasePlaneField f(g);
    const auto& vals = j.at("values");
    require(vals.size() == f.values.size(), "phase_field_from_json: values length mismatch");
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = cplx{vals[i].at(0).get<double>(), vals[i].at(1).get<double>()};
    return f;
}

std::string symbol_to_json(const SpectralSymbol& m) {
    json j;
    switch (m.family) {
        case SpectralSymbol::Family::Constant:
            j["family"] = "constant";
            j["re"] = m.value.real();
            j["im"] = m.value.imag();
            break;
        case SpectralSymbol::Family::Oscillatory:
            j["family"] = "oscillatory";
            j["beta"] = m.beta;
            j["gamma"] = m.gamma;
            break;
        case SpectralSymbol::Family::Schrodinger:
            j["family"] = "schrodinger";
            j["t"] = m.t;
            break;
        case SpectralSymbol::Family::Wave:
            j["family"] = "wave";
            j["t"] = m.t;
            break;
        case SpectralSymbol::Family::Table: {
            j["family"] = "table";
            json rows = json::array();
            for (const auto& [lam, v] : m.table)
                rows.push_back(json::array({lam, v.real(), v.imag()}));
            j["table"] = std::move(rows);
            break;
        }
        case SpectralSymbol::Family::Callable:
            fail("symbol_to_json: callable symbols have no serial form");
    }
    return j.dump();
}

SpectralSymbol symbol_from_json(const std::string& text) {
    json j = json::parse(text);
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "constant")
        return SpectralSymbol::constant(
            cplx{j.at("re").get<double>(), j.value("im", 0.0)});
    if (fam == "oscillatory")
        return SpectralSymbol::oscillatory(j.at("beta").get<double>(), j.at("gamma").get<double>());
    if (fam == "schrodinger") return SpectralSymbol::schrodinger(j.at("t").get<double>());
    if (fam == "wave") return SpectralSymbol::wave(j.at("t").get<double>());
    if (fam == "table") {
        std::map<double, cplx> rows;
        for (const auto& r : j.at("table"))
            rows[r.at(0).get<double>()] = cplx{r.at(1).get<double>(), r.at(2).get<double>()};
        return SpectralSymbol::from_table(std::move(rows));
    }
    fail("symbol_from_json: unknown family " + fam);
}

std::string norm_record_json(const std::string& space, double p, double q, double value) {
    json j;
    j["space"] = space;
    // JSON has no infinity literal; unbounded exponents go out as "inf"
    if (std::isinf(p)) j["p"] = "inf"; else j["p"] = p;
    if (std::isinf(q)) j["q"] = "inf"; else j["q"] = q;
    j["value"] = value;
    return j.dump();
}

} // namespace hermlab
