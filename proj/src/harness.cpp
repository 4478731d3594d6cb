#include "elasto/harness.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "detail/numfmt.hpp"
#include "elasto/ddm.hpp"
#include "elasto/postprocess.hpp"

#ifdef ELASTO_HAVE_OPENMP
#include <omp.h>
#endif

namespace elasto {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("config: " + what); }

Vec2 vec2(const json& j, const char* key) {
    if (!j.is_array() || j.size() != 2) bad(std::string(key) + " must be a 2-vector");
    return {j[0].get<double>(), j[1].get<double>()};
}

FourierSeries series(const json& j) {
    FourierSeries s;
    s.a0 = j.value("a0", 0.0);
    s.c = j.value("cos", std::vector<double>{});
    s.s = j.value("sin", std::vector<double>{});
    return s;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [k, v] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) bad("unknown key '" + k + "' in " + where);
    }
}

const std::map<std::string, std::vector<std::string>>& accepted_formulations() {
    static const std::map<std::string, std::vector<std::string>> m{
        {"manufactured",
         {"V", "K", "Kt", "W", "dirichlet-cfie", "dirichlet-cfier", "neumann-cfie", "neumann-cfier", "neumann-dcfier"}},
        {"dirichlet", {"cfie", "cfier"}},
        {"neumann", {"cfie", "cfier", "dcfier"}},
        {"transmission", {"sc", "kr", "dcfier", "icfier", "os"}},
    };
    return m;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        bad(std::string("parse error: ") + e.what());
    }
    check_keys(j,
               {"name", "problem", "geometry", "materials", "interior", "incidence", "formulations", "runs", "solver",
                "reference", "output", "memory_budget_gb"},
               "top level");
    ExperimentConfig c;
    c.name = j.value("name", "");
    c.problem = j.value("problem", c.problem);
    if (!accepted_formulations().contains(c.problem)) bad("unknown problem '" + c.problem + "'");

    if (j.contains("geometry")) {
        const json& g = j["geometry"];
        check_keys(g, {"kind", "radius", "center", "x1", "x2"}, "geometry");
        c.geometry = g.value("kind", c.geometry);
        c.curve.radius = g.value("radius", 1.0);
        if (g.contains("center")) c.curve.center = vec2(g["center"], "center");
        if (g.contains("x1")) c.curve.x1 = series(g["x1"]);
        if (g.contains("x2")) c.curve.x2 = series(g["x2"]);
    }
    make_curve(c.geometry, c.curve);  // resolves the name

    if (j.contains("materials")) {
        c.materials.clear();
        for (const json& m : j["materials"]) {
            check_keys(m, {"lambda", "mu"}, "materials");
            c.materials.push_back({m.at("lambda").get<double>(), m.at("mu").get<double>()});
        }
    }
    const std::size_t need = c.problem == "transmission" ? 2 : 1;
    if (c.materials.size() != need) bad("problem '" + c.problem + "' needs " + std::to_string(need) + " material(s)");
    for (const auto& m : c.materials)
        if (!(m.mu > 0.0 && m.lambda + m.mu > 0.0)) bad("inadmissible Lame parameters");
    c.interior = j.value("interior", c.interior);
    if (c.interior != "first" && c.interior != "second") bad("interior must be 'first' or 'second'");

    if (j.contains("incidence")) {
        const json& i = j["incidence"];
        check_keys(i, {"type", "direction", "polarization", "source", "strength"}, "incidence");
        c.incidence.type = i.value("type", c.incidence.type);
        if (i.contains("direction")) c.incidence.direction = vec2(i["direction"], "direction").normalized();
        if (i.contains("polarization")) c.incidence.polarization = vec2(i["polarization"], "polarization");
        if (i.contains("source")) c.incidence.source = vec2(i["source"], "source");
        if (i.contains("strength")) c.incidence.strength = vec2(i["strength"], "strength").cast<cplx>();
    }
    if (c.incidence.type != "P" && c.incidence.type != "S" && c.incidence.type != "point_source")
        bad("incidence type must be P, S or point_source");
    if (c.problem == "manufactured") c.incidence.type = "point_source";

    const auto& okf = accepted_formulations().at(c.problem);
    for (const json& f : j.value("formulations", json::array())) {
        check_keys(f, {"name", "label", "eta", "kappa", "variant", "eps"}, "formulations");
        FormulationConfig fc;
        fc.name = f.at("name").get<std::string>();
        if (std::find(okf.begin(), okf.end(), fc.name) == okf.end())
            bad("formulation '" + fc.name + "' is not available for problem '" + c.problem + "'");
        fc.label = f.value("label", fc.name);
        if (f.contains("eta")) {
            if (f["eta"].is_number()) {
                fc.eta_rule = "value";
                fc.eta = f["eta"].get<double>();
                if (fc.eta == 0.0) bad("eta must be nonzero");
            } else {
                fc.eta_rule = f["eta"].get<std::string>();
                if (fc.eta_rule != "one" && fc.eta_rule != "optimal") bad("eta rule must be one, optimal or a number");
            }
        }
        if (f.contains("kappa") && f["kappa"].is_array()) {
            const Vec2 k = vec2(f["kappa"], "kappa");
            fc.kappa = cplx(k(0), k(1));
        } else if (f.contains("kappa") && f["kappa"] != "default") {
            bad("kappa must be \"default\" or [re, im]");
        }
        fc.variant = f.value("variant", fc.variant);
        if (fc.variant != "plain" && fc.variant != "eps" && fc.variant != "single") bad("unknown os variant");
        fc.eps = f.value("eps", fc.eps);
        c.formulations.push_back(fc);
    }
    if (c.formulations.empty()) bad("no formulations listed");

    for (const json& r : j.value("runs", json::array())) {
        check_keys(r, {"omega", "n"}, "runs");
        RunCell cell;
        cell.omega = r.at("omega").get<double>();
        if (!(cell.omega > 0.0)) bad("omega must be positive");
        cell.n = r.at("n").get<std::vector<int>>();
        for (std::size_t k = 0; k < cell.n.size(); ++k) {
            if (cell.n[k] < 2) bad("n must be at least 2");
            if (k > 0 && cell.n[k] <= cell.n[k - 1]) bad("n list must be sorted ascending");
        }
        c.runs.push_back(cell);
    }

    if (j.contains("solver")) {
        const json& s = j["solver"];
        check_keys(s, {"tol", "max_iter", "method"}, "solver");
        c.tol = s.value("tol", c.tol);
        c.max_iter = s.value("max_iter", c.max_iter);
        c.method = s.value("method", c.method);
    }
    if (!(c.tol > 0.0 && c.tol < 1.0)) bad("tol must lie in (0,1)");
    if (c.method != "gmres" && c.method != "lu") bad("solver method must be gmres or lu");
    c.reference = j.value("reference", c.problem == "manufactured" ? std::string("point_source") : c.reference);
    if (c.reference != "none" && c.reference != "point_source" && c.reference != "first_formulation")
        bad("reference must be none, point_source or first_formulation");
    if (c.reference == "point_source" && c.problem != "manufactured") bad("point_source reference needs a manufactured problem");
    c.memory_budget_gb = j.value("memory_budget_gb", c.memory_budget_gb);

    if (j.contains("output")) {
        const json& o = j["output"];
        check_keys(o, {"path", "format", "pivot", "far_field_angles", "record_time"}, "output");
        c.output = o.value("path", c.output);
        c.format = o.value("format", c.format);
        c.pivot = o.value("pivot", c.pivot);
        c.far_field_angles = o.value("far_field_angles", c.far_field_angles);
        c.record_time = o.value("record_time", c.record_time);
    }
    if (c.format != "csv" && c.format != "text") bad("output format must be csv or text");
    if (c.pivot != "none" && c.pivot != "iterations" && c.pivot != "eps_inf") bad("pivot must be none, iterations or eps_inf");
    if (c.far_field_angles < 1) bad("far_field_angles must be positive");
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read config " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

// ---------------------------------------------------------------- experiments

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

IncidentField make_incident(const ExperimentConfig& c, const Material& m) {
    const IncidenceConfig& i = c.incidence;
    if (i.type == "point_source") return point_source(m, i.source, i.strength);
    if (i.type == "P") return plane_wave(m, i.direction, i.direction);
    // S-wave: keep only the part of the polarization orthogonal to d
    Vec2 p = i.polarization - i.polarization.dot(i.direction) * i.direction;
    if (p.norm() == 0.0) p = Vec2(-i.direction(1), i.direction(0));
    return plane_wave(m, i.direction, p.normalized());
}

struct Solved {
    CVec x;
    int iterations = 0;
    bool converged = true;
};

Solved solve(const ExperimentConfig& c, const CMat& A, const CVec& b) {
    if (c.method == "lu") return {lu_solve(A, b), 0, true};
    auto r = gmres(A, b, c.tol, c.max_iter);
    return {std::move(r.x), r.report.iterations, r.report.converged};
}

double estimated_gb(const ExperimentConfig& c, int n) {
    const double N = 4.0 * n;
    const double mats = c.problem == "transmission" ? 32.0 : 7.0;
    return 16.0 * mats * N * N / 1e9;
}

Coupling coupling_for(const FormulationConfig& f, const Material& m, bool dirichlet) {
    Coupling cp;
    if (f.eta_rule == "optimal")
        cp.eta = dirichlet ? eta_dirichlet_opt(m) : eta_neumann_opt(m);
    else if (f.eta_rule == "value")
        cp.eta = f.eta;
    if (f.kappa) cp.kappa = *f.kappa;
    return cp;
}

}  // namespace

std::vector<ReportRow> run_experiment(const ExperimentConfig& c, RunLog* log) {
    std::vector<ReportRow> rows;
    const Curve curve = make_curve(c.geometry, c.curve);
    const auto angles = far_field_angles(c.far_field_angles);
    const bool want_ff = c.reference != "none";
    for (const RunCell& cell : c.runs) {
        for (int n : cell.n) {
            if (estimated_gb(c, n) > c.memory_budget_gb) {
                if (log)
                    log->skipped.push_back("omega=" + detail::num(cell.omega) + " n=" + std::to_string(n) +
                                           ": needs about " + detail::num(std::round(estimated_gb(c, n) * 10) / 10) +
                                           " GB of dense storage");
                continue;
            }
            const auto t_shared = Clock::now();
            const CurveGrid grid = sample_grid(curve, n);
            std::optional<FarField> first_ff;

            if (c.problem == "transmission") {
                const MaterialConfig& mi = c.interior == "first" ? c.materials[0] : c.materials[1];
                const MaterialConfig& me = c.interior == "first" ? c.materials[1] : c.materials[0];
                const Material plus = make_material(me.lambda, me.mu, cell.omega);
                const Material minus = make_material(mi.lambda, mi.mu, cell.omega);
                const BioSet bp = assemble_bios(plus, grid), bm = assemble_bios(minus, grid);
                const CauchyData data = trace_and_traction(make_incident(c, plus), grid, plus);
                const double shared = since(t_shared);
                for (const FormulationConfig& f : c.formulations) {
                    const auto t0 = Clock::now();
                    const cplx kappa = f.kappa.value_or(default_kappa(plus));
                    ReportRow row{cell.omega, n, f.label, 0, std::nullopt, std::nullopt, true};
                    std::optional<Reconstruction> rec;
                    if (f.name == "os") {
                        RtrOptions opt;
                        opt.variant = f.variant == "eps" ? RtrVariant::eps
                                      : f.variant == "single" ? RtrVariant::single
                                                              : RtrVariant::plain;
                        opt.eps = f.eps;
                        const DdmSystem d = assemble_ddm(plus, minus, grid, bp, bm, kappa, data, opt);
                        const Solved s = solve(c, d.sys.op.mat, d.sys.rhs);
                        row.iterations = s.iterations;
                        row.converged = s.converged;
                        if (want_ff) rec = reconstruct_ddm(d, s.x, plus, minus, grid);
                    } else {
                        const TransmissionKind k = f.name == "sc"       ? TransmissionKind::SC
                                                   : f.name == "kr"     ? TransmissionKind::KR
                                                   : f.name == "dcfier" ? TransmissionKind::DCFIER
                                                                        : TransmissionKind::ICFIER;
                        const LinearSystem sys = assemble_transmission(k, plus, minus, grid, bp, bm, kappa, data);
                        const Solved s = solve(c, sys.op.mat, sys.rhs);
                        row.iterations = s.iterations;
                        row.converged = s.converged;
                        if (want_ff) rec = reconstruct_fields(sys, s.x, plus, grid, data, minus);
                    }
                    if (rec) {
                        const FarField ff = far_field(rec->exterior, angles);
                        if (!first_ff) first_ff = ff;
                        row.eps_inf = eps_inf(ff, *first_ff);
                    }
                    if (c.record_time) row.seconds = shared + since(t0);
                    rows.push_back(row);
                }
                continue;
            }

            const MaterialConfig& mc = c.materials[0];
            const Material m = make_material(mc.lambda, mc.mu, cell.omega);
            const BioSet b = assemble_bios(m, grid);
            const IncidentField field = make_incident(c, m);
            const CauchyData data = trace_and_traction(field, grid, m);
            const double shared = since(t_shared);
            const DataRole role = c.problem == "manufactured" ? DataRole::radiating : DataRole::scattering;
            for (const FormulationConfig& f : c.formulations) {
                const auto t0 = Clock::now();
                ReportRow row{cell.omega, n, f.label, 0, std::nullopt, std::nullopt, true};
                std::string name = f.name;
                if (c.problem == "dirichlet") name = "dirichlet-" + name;
                if (c.problem == "neumann") name = "neumann-" + name;
                LinearSystem sys;
                if (name == "V")
                    sys = assemble_dirichlet(DirichletKind::SL, m, grid, b, {}, data, role);
                else if (name == "K")
                    sys = assemble_dirichlet(DirichletKind::DL, m, grid, b, {}, data, role);
                else if (name == "Kt")
                    sys = assemble_neumann(NeumannKind::SL, m, grid, b, {}, data, role);
                else if (name == "W")
                    sys = assemble_neumann(NeumannKind::DL, m, grid, b, {}, data, role);
                else if (name.starts_with("dirichlet-"))
                    sys = assemble_dirichlet(name == "dirichlet-cfie" ? DirichletKind::CFIE : DirichletKind::CFIER, m,
                                             grid, b, coupling_for(f, m, true), data, role);
                else
                    sys = assemble_neumann(name == "neumann-cfie"    ? NeumannKind::CFIE
                                           : name == "neumann-cfier" ? NeumannKind::CFIER
                                                                     : NeumannKind::DCFIER,
                                           m, grid, b, coupling_for(f, m, false), data, role);
                const Solved s = solve(c, sys.op.mat, sys.rhs);
                row.iterations = s.iterations;
                row.converged = s.converged;
                if (want_ff) {
                    const FarField ff = far_field(reconstruct_fields(sys, s.x, m, grid, data).exterior, angles);
                    if (c.reference == "point_source") {
                        row.eps_inf = eps_inf(ff, point_source_far_field(m, c.incidence.source, c.incidence.strength, angles));
                    } else {
                        if (!first_ff) first_ff = ff;
                        row.eps_inf = eps_inf(ff, *first_ff);
                    }
                }
                if (c.record_time) row.seconds = shared + since(t0);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------- tables

namespace {

std::string short_num(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

// csv keeps full round-trip precision; text is for reading
std::string opt_num(const std::optional<double>& v, TableFormat f = TableFormat::csv) {
    if (!v) return {};
    return f == TableFormat::csv ? detail::num(*v) : short_num(*v);
}

std::string render(const std::vector<std::vector<std::string>>& cells, TableFormat f) {
    std::ostringstream os;
    if (f == TableFormat::csv) {
        for (const auto& line : cells) {
            for (std::size_t k = 0; k < line.size(); ++k) os << (k ? "," : "") << line[k];
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::size_t> w;
    for (const auto& line : cells)
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (w.size() <= k) w.push_back(0);
            w[k] = std::max(w[k], line[k].size());
        }
    for (const auto& line : cells) {
        for (std::size_t k = 0; k < line.size(); ++k) os << (k ? "  " : "") << std::setw(int(w[k])) << line[k];
        os << '\n';
    }
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw std::invalid_argument("parse_table: bad number '" + s + "'");
    return v;
}

}  // namespace

std::string format_table(const std::vector<ReportRow>& rows, TableFormat format) {
    std::vector<std::vector<std::string>> cells{{"omega", "n", "formulation", "iterations", "eps_inf", "seconds", "converged"}};
    for (const ReportRow& r : rows)
        cells.push_back({detail::num(r.omega), std::to_string(r.n), r.formulation, std::to_string(r.iterations),
                         opt_num(r.eps_inf, format), opt_num(r.seconds, format), r.converged ? "1" : "0"});
    return render(cells, format);
}

std::string format_pivot(const std::vector<ReportRow>& rows, const std::string& value, TableFormat format) {
    if (value != "iterations" && value != "eps_inf") throw std::invalid_argument("format_pivot: unknown value " + value);
    std::vector<std::string> labels;
    std::vector<std::pair<double, int>> keys;
    std::map<std::pair<std::pair<double, int>, std::string>, std::string> v;
    for (const ReportRow& r : rows) {
        if (std::find(labels.begin(), labels.end(), r.formulation) == labels.end()) labels.push_back(r.formulation);
        const std::pair<double, int> key{r.omega, r.n};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        std::string s = value == "iterations" ? std::to_string(r.iterations) : opt_num(r.eps_inf, format);
        if (!r.converged) s += "*";
        v[{key, r.formulation}] = s;
    }
    std::vector<std::vector<std::string>> cells{{"omega", "n"}};
    for (const auto& l : labels) cells[0].push_back(l);
    for (const auto& k : keys) {
        std::vector<std::string> line{detail::num(k.first), std::to_string(k.second)};
        for (const auto& l : labels) {
            const auto it = v.find({k, l});
            line.push_back(it == v.end() ? std::string() : it->second);
        }
        cells.push_back(line);
    }
    return render(cells, format);
}

void emit_table(const std::string& content, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("emit_table: cannot write " + path);
    os << content;
    if (!os) throw std::runtime_error("emit_table: write failed for " + path);
}

std::vector<ReportRow> parse_table(const std::string& csv) {
    std::vector<ReportRow> rows;
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || split(line, ',').front() != "omega") throw std::invalid_argument("parse_table: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 7) throw std::invalid_argument("parse_table: expected 7 fields");
        ReportRow r;
        r.omega = to_double(f[0]);
        r.n = std::stoi(f[1]);
        r.formulation = f[2];
        r.iterations = std::stoi(f[3]);
        if (!f[4].empty()) r.eps_inf = to_double(f[4]);
        if (!f[5].empty()) r.seconds = to_double(f[5]);
        r.converged = f[6] == "1";
        rows.push_back(r);
    }
    return rows;
}

void set_thread_count(int threads) {
#ifdef ELASTO_HAVE_OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

}  // namespace elasto
