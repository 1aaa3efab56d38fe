#include "dhh/config.hpp"

#include <fstream>
#include <sstream>

#include "dhh/errors.hpp"

namespace dhh::cli {

using diffmod::Bimodule;
using diffmod::DiffAlgebra;
using diffmod::DiffRing;
using linfp::Matrix;
using linfp::Vec;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::uint32_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::uint32_t c = 0; c < m.cols(); ++c) row.push_back(int(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::uint32_t p, const char* what) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ParseError(std::string(what) + ": expected a matrix (array of rows)");
    std::uint32_t rows = static_cast<std::uint32_t>(j.size());
    std::uint32_t cols = static_cast<std::uint32_t>(j[0].size());
    Matrix m(rows, cols, p);
    for (std::uint32_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols) throw ParseError(std::string(what) + ": ragged matrix");
        for (std::uint32_t c = 0; c < cols; ++c) m.set(r, c, j[r][c].get<std::uint32_t>() % p);
    }
    return m;
}

namespace {

Vec vec_from_json(const json& j, std::uint32_t p, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a vector");
    Vec v;
    for (const auto& x : j) v.push_back(static_cast<std::uint8_t>(x.get<std::uint32_t>() % p));
    return v;
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (auto x : v) a.push_back(int(x));
    return a;
}

std::vector<std::vector<Vec>> mult_from_json(const json& j, std::uint32_t dim, std::uint32_t p,
                                             const char* what) {
    if (!j.is_array() || j.size() != dim) throw ParseError(std::string(what) + ": mult table shape");
    std::vector<std::vector<Vec>> mult(dim, std::vector<Vec>(dim));
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (j[i].size() != dim) throw ParseError(std::string(what) + ": mult table shape");
        for (std::uint32_t k = 0; k < dim; ++k) {
            mult[i][k] = vec_from_json(j[i][k], p, what);
            if (mult[i][k].size() != dim) throw ParseError(std::string(what) + ": mult entry length");
        }
    }
    return mult;
}

json mult_to_json(const std::vector<std::vector<Vec>>& mult) {
    json out = json::array();
    for (const auto& row : mult) {
        json r = json::array();
        for (const auto& v : row) r.push_back(vec_to_json(v));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Matrix> matrices_from_json(const json& j, std::uint32_t p, const char* what) {
    std::vector<Matrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m, p, what));
    return out;
}

json matrices_to_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(matrix_to_json(m));
    return out;
}

}  // namespace

InstanceConfig parse_config(const json& doc) {
    if (!doc.contains("p")) throw ParseError("missing field 'p'");
    std::uint32_t p = doc["p"].get<std::uint32_t>();
    if (!linfp::is_prime(p) || p > 251)
        throw ParseError("p = " + std::to_string(p) + " is not a prime <= 251");

    const json& jr = doc.at("ring");
    DiffRing k;
    k.p = p;
    k.dim = jr.at("dim").get<std::uint32_t>();
    k.mult = mult_from_json(jr.at("mult"), k.dim, p, "ring.mult");
    k.unit = vec_from_json(jr.at("unit"), p, "ring.unit");
    k.sigma = matrix_from_json(jr.at("sigma"), p, "ring.sigma");
    auto krep = diffmod::validate(k);
    if (!krep.ok) throw AxiomViolation("ring: " + krep.first());
    auto kp = std::make_shared<const DiffRing>(std::move(k));

    const json& ja = doc.at("algebra");
    DiffAlgebra a;
    a.module.ring = kp;
    a.module.dim = ja.at("dim").get<std::uint32_t>();
    a.module.act = matrices_from_json(ja.at("act"), p, "algebra.act");
    a.module.sigma = matrix_from_json(ja.at("sigma"), p, "algebra.sigma");
    a.mult = mult_from_json(ja.at("mult"), a.module.dim, p, "algebra.mult");
    a.unit = vec_from_json(ja.at("unit"), p, "algebra.unit");
    auto arep = diffmod::validate(a);
    if (!arep.ok) throw AxiomViolation("algebra: " + arep.first());
    auto ap = std::make_shared<const DiffAlgebra>(std::move(a));

    const json& jm = doc.at("module");
    Bimodule m;
    m.algebra = ap;
    m.module.ring = kp;
    m.module.dim = jm.at("dim").get<std::uint32_t>();
    m.module.act = matrices_from_json(jm.at("act"), p, "module.act");
    m.module.sigma = matrix_from_json(jm.at("sigma"), p, "module.sigma");
    m.left = matrices_from_json(jm.at("left"), p, "module.left");
    m.right = matrices_from_json(jm.at("right"), p, "module.right");
    auto mrep = diffmod::validate(m);
    if (!mrep.ok) throw AxiomViolation("module: " + mrep.first());

    InstanceConfig cfg;
    cfg.instance.name = doc.value("name", std::string("instance"));
    cfg.instance.algebra = ap;
    cfg.instance.bimodule = std::move(m);
    cfg.max_degree = doc.value("max_degree", 4u);
    if (doc.contains("options")) {
        const json& jo = doc["options"];
        cfg.options.seed = jo.value("seed", 0ull);
        cfg.options.trials = jo.value("trials", 0u);
        cfg.options.order = jo.value("order", 2u);
        cfg.options.degree = jo.value("degree", 2u);
    }
    return cfg;
}

InstanceConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_config(doc);
}

InstanceConfig config_from_preset(const std::string& name, std::uint32_t max_degree) {
    InstanceConfig cfg;
    cfg.instance = instances::preset(name);
    cfg.max_degree = max_degree;
    return cfg;
}

json instance_to_json(const instances::Instance& inst) {
    const auto& a = *inst.algebra;
    const auto& k = *a.ring();
    const auto& m = inst.bimodule;
    json doc;
    doc["name"] = inst.name;
    doc["p"] = k.p;
    doc["ring"] = {{"dim", k.dim},
                   {"mult", mult_to_json(k.mult)},
                   {"unit", vec_to_json(k.unit)},
                   {"sigma", matrix_to_json(k.sigma)}};
    doc["algebra"] = {{"dim", a.dim()},
                      {"act", matrices_to_json(a.module.act)},
                      {"mult", mult_to_json(a.mult)},
                      {"unit", vec_to_json(a.unit)},
                      {"sigma", matrix_to_json(a.module.sigma)}};
    doc["module"] = {{"dim", m.dim()},
                     {"act", matrices_to_json(m.module.act)},
                     {"sigma", matrix_to_json(m.module.sigma)},
                     {"left", matrices_to_json(m.left)},
                     {"right", matrices_to_json(m.right)}};
    return doc;
}

json transcript_to_json(const spectral::SequenceTranscript& t) {
    json out;
    out["name"] = t.name;
    out["exact"] = t.exact;
    json pos = json::array();
    for (const auto& p : t.positions) {
        pos.push_back({{"at", p.at},
                       {"dim", p.dim_mid},
                       {"rank_in", p.rank_in},
                       {"rank_out", p.rank_out},
                       {"composite_zero", p.composite_zero},
                       {"exact", p.exact}});
    }
    out["positions"] = std::move(pos);
    if (!t.dims_labels.empty()) {
        json dims;
        for (std::uint32_t i = 0; i < t.dims_labels.size(); ++i) dims[t.dims_labels[i]] = t.dims_rows[i];
        out["dims"] = std::move(dims);
    }
    return out;
}

Report cohomology_report(const InstanceConfig& cfg) {
    Report rep;
    spectral::AbsoluteHH hh = spectral::absolute_hh(cfg.instance.algebra, cfg.instance.bimodule,
                                                    cfg.max_degree);
    json& j = rep.machine;
    j["instance"] = instance_to_json(cfg.instance);
    j["max_degree"] = cfg.max_degree;
    j["dims"] = {{"internal", hh.internal_dims},
                 {"fix_complex", hh.fix_dims},
                 {"coinv_complex", hh.coinv_dims},
                 {"fix_of_internal", hh.fix_of_h},
                 {"coinv_of_internal", hh.coinv_of_h},
                 {"hyper", hh.hyper}};
    json ses = json::array();
    for (const auto& t : hh.ses) ses.push_back(transcript_to_json(t));
    j["ses"] = std::move(ses);
    j["les"] = transcript_to_json(hh.les);
    j["all_exact"] = hh.all_exact;
    rep.all_passed = hh.all_exact;

    std::ostringstream os;
    os << "instance " << cfg.instance.name << " (p=" << cfg.instance.algebra->p()
       << ", dim k=" << cfg.instance.algebra->ring()->dim
       << ", dim A=" << cfg.instance.algebra->dim()
       << ", dim M=" << cfg.instance.bimodule.dim() << ", D=" << cfg.max_degree << ")\n";
    auto row = [&](const char* label, const std::vector<std::uint32_t>& v) {
        os << "  " << label << ":";
        for (auto x : v) os << " " << x;
        os << "\n";
    };
    row("internal HH^n       ", hh.internal_dims);
    row("fix-complex HH^{n,s}", hh.fix_dims);
    row("coinv-complex HH^n_s", hh.coinv_dims);
    row("fix(HH^n)           ", hh.fix_of_h);
    row("coinv(HH^n)         ", hh.coinv_of_h);
    row("hyper H^n           ", hh.hyper);
    os << "  ses exact at degrees 1.." << cfg.max_degree << ": " << (hh.all_exact ? "yes" : "NO") << "\n";
    os << "  les exact: " << (hh.les.exact ? "yes" : "NO") << "\n";
    rep.human = os.str();
    return rep;
}

}  // namespace dhh::cli
