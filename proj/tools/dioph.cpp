#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dioph/asymptotics.hpp"
#include "dioph/classify.hpp"
#include "dioph/counting.hpp"
#include "dioph/families.hpp"
#include "dioph/json_io.hpp"
#include "dioph/numeric.hpp"
#include "dioph/parse.hpp"
#include "dioph/transforms.hpp"

namespace {

using dioph::json;

// exit codes: 0 ok, 2 bad equation or bad usage, 3 work budget refused,
// 4 the requested transform has no integer realization
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitTransform = 4;

dioph::BoxMode to_mode(const std::string& s) {
    return s == "orthant" ? dioph::BoxMode::NaturalOrthant : dioph::BoxMode::IntegerBox;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_kv(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows)
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

std::string dstr(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

json load_json_arg(const std::string& inline_text, const std::string& path) {
    if (!inline_text.empty()) return json::parse(inline_text);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

dioph::IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a row array");
    dioph::IntMatrix m;
    for (const auto& row : j) {
        std::vector<mpz_class> r;
        for (const auto& e : row)
            r.push_back(e.is_string() ? mpz_class(e.get<std::string>())
                                      : mpz_class(std::to_string(e.get<long long>())));
        if (!m.empty() && r.size() != m.front().size())
            throw std::invalid_argument("matrix rows differ in length");
        m.push_back(std::move(r));
    }
    if (m.size() != m.front().size()) throw std::invalid_argument("matrix must be square");
    return m;
}

std::vector<mpz_class> int_vector_from_csv(const std::string& text, std::size_t want) {
    std::vector<mpz_class> out;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.emplace_back(item);
    }
    if (out.empty()) out.assign(want, mpz_class(0));
    if (out.size() != want)
        throw std::invalid_argument("expected " + std::to_string(want) + " components");
    return out;
}

// shared flags; one instance per subcommand that needs them
struct RunConfig {
    std::string eq;
    long long N = 10;
    std::vector<long long> Ns;
    std::string mode = "box";
    std::string engine = "auto";
    std::string format = "json";
    double slack = 0.25;
    unsigned long long budget = 1'000'000'000ULL;
    unsigned threads = 1;
    unsigned long long seed = 0;  // reserved for randomized suites
    bool assert_irreducible = false;
    bool assert_genus = false;

    dioph::EngineOptions engine_opts() const {
        dioph::EngineOptions o;
        o.budget = budget;
        o.threads = threads;
        return o;
    }
};

void add_budget_flag(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--budget", cfg.budget, "Largest point count an engine may visit")
        ->envname("DIOPH_BUDGET");
}

int run_count(const RunConfig& cfg, const std::vector<long long>& slices_1based) {
    dioph::Polynomial p = dioph::parse_equation(cfg.eq);
    dioph::Box box{cfg.N, to_mode(cfg.mode)};
    dioph::EngineOptions opts = cfg.engine_opts();

    dioph::CountResult r;
    if (cfg.engine == "auto") {
        r = dioph::count_auto(p, box, opts);
    } else if (cfg.engine == "brute") {
        r = dioph::count_brute(p, box, opts);
    } else if (cfg.engine == "explicit") {
        r = dioph::count_explicit(p, box, opts);
    } else if (cfg.engine == "sliced") {
        std::vector<std::size_t> sv;
        for (long long v : slices_1based) {
            if (v < 1) throw std::invalid_argument("slice variables are 1-based");
            sv.push_back(static_cast<std::size_t>(v - 1));
        }
        if (sv.empty()) sv = dioph::default_slice_vars(p);
        r = dioph::count_sliced(p, box, sv, opts);
    } else {
        r = dioph::count_mitm(p, box, opts);
    }

    if (cfg.format == "json") {
        emit(dioph::count_to_json(p, r, false));
    } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"equation", dioph::render(p)},
            {"mode", dioph::mode_name(box.mode)},
            {"N", std::to_string(box.radius)},
            {"engine", dioph::engine_name(r.engine)},
            {"count", std::to_string(r.count)},
            {"elapsed", dstr(r.elapsed_seconds) + " s"}};
        for (const auto& [value, cnt] : r.slice_counts)
            rows.push_back({"slice " + std::to_string(value), std::to_string(cnt)});
        emit_kv(rows);
    }
    return 0;
}

int run_fit(const RunConfig& cfg) {
    if (cfg.Ns.size() < 3) {
        std::cerr << "fit needs at least three sample sizes (--N)\n";
        return kExitUsage;
    }
    for (std::size_t i = 1; i < cfg.Ns.size(); ++i)
        if (cfg.Ns[i] <= cfg.Ns[i - 1]) {
            std::cerr << "sample sizes must be strictly increasing\n";
            return kExitUsage;
        }

    dioph::Polynomial p = dioph::parse_equation(cfg.eq);
    dioph::ClassifyOptions copts;
    copts.assert_irreducible = cfg.assert_irreducible;
    copts.assert_genus_ge1 = cfg.assert_genus;
    dioph::EquationClass cls = dioph::classify(p, copts);
    dioph::BoundCheck chk = dioph::check_bound(p, to_mode(cfg.mode), cfg.Ns, cfg.slack, copts,
                                               {}, cfg.engine_opts());

    if (cfg.format == "json") {
        emit(dioph::bound_report_to_json(p, cls, chk));
    } else if (cfg.format == "csv") {
        std::cout << "N,count\n";
        for (const auto& pt : chk.points) std::cout << pt.N << "," << pt.count << "\n";
    } else {
        json pred = dioph::prediction_to_json(chk.prediction);
        std::vector<std::pair<std::string, std::string>> rows{
            {"equation", dioph::render(p)},
            {"class", dioph::kind_name(cls.kind)},
            {"predicted", pred.contains("exponent") ? pred["exponent"].get<std::string>()
                                                    : pred["kind"].get<std::string>()},
            {"method", chk.prediction.method}};
        for (const auto& pt : chk.points)
            rows.push_back({"count N=" + std::to_string(pt.N), std::to_string(pt.count)});
        if (!chk.fit.points.empty() && !chk.fit.empty_observed)
            rows.push_back({"alpha", dstr(chk.fit.alpha)});
        rows.push_back({"verdict", dioph::verdict_name(chk.verdict)});
        if (!chk.detail.empty()) rows.push_back({"detail", chk.detail});
        emit_kv(rows);
    }
    return 0;
}

void emit_matrix(const dioph::TransformMatrix& m, const std::string& format) {
    if (format == "json") {
        emit(dioph::matrix_to_json(m));
        return;
    }
    for (std::size_t i = 0; i < m.size; ++i) {
        for (std::size_t j = 0; j < m.size; ++j)
            std::cout << (j ? "  " : "") << m.at(i, j).str();
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and integer transforms for polynomial equations in boxes"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed recorded for randomized suites");

    auto* count = app.add_subcommand("count", "Count solutions in a box");
    std::vector<long long> slices;
    count->add_option("--eq", cfg.eq, "Equation, e.g. 'x1^2 + x2^2 - x3^2 = 1'")->required();
    count->add_option("--N", cfg.N, "Box radius")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--mode", cfg.mode, "Point domain")
        ->check(CLI::IsMember({"box", "orthant"}))
        ->capture_default_str();
    count->add_option("--engine", cfg.engine, "Counting engine")
        ->check(CLI::IsMember({"auto", "brute", "explicit", "sliced", "mitm"}))
        ->capture_default_str();
    count->add_option("--slices", slices, "1-based variables to slice, outermost first");
    count->add_option("--threads", cfg.threads, "Worker threads for the brute engine");
    count->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    add_budget_flag(count, cfg);

    auto* fit = app.add_subcommand("fit", "Fit count growth and test the predicted bound");
    fit->add_option("--eq", cfg.eq, "Equation")->required();
    fit->add_option("--N", cfg.Ns, "Sample radii (at least three, increasing)")->required();
    fit->add_option("--mode", cfg.mode, "Point domain")
        ->check(CLI::IsMember({"box", "orthant"}))
        ->capture_default_str();
    fit->add_option("--slack", cfg.slack, "Allowed fitted-exponent excess")
        ->capture_default_str();
    fit->add_option("--threads", cfg.threads, "Worker threads for the brute engine");
    fit->add_flag("--assert-irreducible", cfg.assert_irreducible,
                  "Caller asserts the polynomial is irreducible");
    fit->add_flag("--assert-genus", cfg.assert_genus,
                  "Caller asserts two-variable restrictions have genus >= 1");
    fit->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    add_budget_flag(fit, cfg);

    auto* tr = app.add_subcommand("transform", "Integer rotations, homotheties, deformations");
    tr->require_subcommand(1);
    std::string tr_format = "json";
    long long u = 2, v = 1;
    long a11 = 0, a12 = 0, a22 = 0;
    std::string branch = "plus";
    std::size_t size = 3;
    std::vector<std::string> planes;
    std::string matrix_json, matrix_file, translate_csv;
    bool raw = false;

    auto add_format = [&tr_format](CLI::App* c) {
        c->add_option("--format", tr_format, "Output format")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_matrix_input = [&](CLI::App* c) {
        auto* a = c->add_option("--matrix-json", matrix_json, "Matrix as inline JSON");
        auto* b = c->add_option("--matrix-file", matrix_file, "Path to matrix JSON");
        a->excludes(b);
    };

    auto* rot = tr->add_subcommand("rotate", "Exact plane rotation from a Pythagorean pair");
    rot->add_option("--u", u, "Larger leg parameter")->required();
    rot->add_option("--v", v, "Smaller leg parameter")->required();
    add_format(rot);

    auto* comp = tr->add_subcommand("compose", "Compose plane rotations in k dimensions");
    comp->add_option("--size", size, "Dimension")->required();
    comp->add_option("--plane", planes, "Rotation as 'i,j,u,v' (1-based axes)")->required();
    add_format(comp);

    auto* cls_cmd = tr->add_subcommand("classify", "Classify the integralizing homothety");
    add_matrix_input(cls_cmd);
    add_format(cls_cmd);

    auto* def = tr->add_subcommand("deform", "Integer deformation lambda*M");
    add_matrix_input(def);
    add_format(def);

    auto* diag = tr->add_subcommand("diagonalize", "Diagonalize a binary quadratic form");
    diag->add_option("--a11", a11, "x^2 coefficient")->required();
    diag->add_option("--a12", a12, "Half the xy coefficient")->required();
    diag->add_option("--a22", a22, "y^2 coefficient")->required();
    diag->add_option("--branch", branch, "Rotation angle branch")
        ->check(CLI::IsMember({"plus", "minus"}));
    add_format(diag);

    auto* appl = tr->add_subcommand("apply", "Substitute an integer affine map into an equation");
    appl->add_option("--eq", cfg.eq, "Equation")->required();
    appl->add_option("--matrix-json", matrix_json, "Integer matrix as JSON rows");
    appl->add_option("--matrix-file", matrix_file, "Path to integer matrix JSON rows");
    appl->add_option("--translate", translate_csv, "Translation, comma-separated");
    appl->add_flag("--raw", raw, "Keep the common content of the image");

    auto* ver = tr->add_subcommand("verify-preservation",
                                   "Check how an affine map moves box solutions");
    ver->add_option("--eq", cfg.eq, "Equation")->required();
    ver->add_option("--matrix-json", matrix_json, "Integer matrix as JSON rows");
    ver->add_option("--matrix-file", matrix_file, "Path to integer matrix JSON rows");
    ver->add_option("--translate", translate_csv, "Translation, comma-separated");
    ver->add_option("--N", cfg.N, "Box radius")->required()->check(CLI::NonNegativeNumber);
    add_budget_flag(ver, cfg);

    auto* fam = app.add_subcommand("family", "Exact solution families");
    fam->require_subcommand(1);
    std::string form_text, lead_text = "1", constant_text = "0", base_csv;
    std::string last_text = "0";
    unsigned long degree = 2;

    auto* lines = fam->add_subcommand("lines", "Line families on x1^2 + x2^2 - x3^2 = 1");
    lines->add_option("--N", cfg.N, "Box radius")->required()->check(CLI::NonNegativeNumber);

    auto* roots = fam->add_subcommand("roots", "Integer roots of lead*x^degree + constant");
    roots->add_option("--lead", lead_text, "Leading coefficient")->required();
    roots->add_option("--constant", constant_text, "Constant term")->required();
    roots->add_option("--degree", degree, "Power")->required();

    auto* wit = fam->add_subcommand("witnesses", "Scaled witnesses from a leading-form zero");
    wit->add_option("--form", form_text, "Homogeneous leading form, e.g. 'x1^2 - x2^2'")
        ->required();
    wit->add_option("--lead", lead_text, "Coefficient of the last variable's power");
    wit->add_option("--constant", constant_text, "Constant term")->required();
    wit->add_option("--base", base_csv, "Nontrivial zero of the form, comma-separated")
        ->required();
    wit->add_option("--last", last_text, "Value of the last variable")->required();
    wit->add_option("--N", cfg.N, "Box radius")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const bool in_transform = app.got_subcommand(tr);
    try {
        if (app.got_subcommand(count)) return run_count(cfg, slices);
        if (app.got_subcommand(fit)) return run_fit(cfg);

        if (in_transform) {
            if (tr->got_subcommand(rot)) {
                emit_matrix(dioph::pythagorean_rotation(u, v), tr_format);
                return 0;
            }
            if (tr->got_subcommand(comp)) {
                std::vector<dioph::PlaneRotation> rotations;
                for (const std::string& plane_text : planes) {
                    std::stringstream ss(plane_text);
                    std::string part;
                    std::vector<long long> nums;
                    while (std::getline(ss, part, ',')) nums.push_back(std::stoll(part));
                    if (nums.size() != 4)
                        throw std::invalid_argument("--plane wants 'i,j,u,v'");
                    if (nums[0] < 1 || nums[1] < 1)
                        throw std::invalid_argument("axes are 1-based");
                    rotations.push_back({static_cast<std::size_t>(nums[0] - 1),
                                         static_cast<std::size_t>(nums[1] - 1),
                                         dioph::pythagorean_rotation(nums[2], nums[3])});
                }
                emit_matrix(dioph::compose_rotations(rotations, size), tr_format);
                return 0;
            }
            if (tr->got_subcommand(cls_cmd) || tr->got_subcommand(def)) {
                if (matrix_json.empty() && matrix_file.empty())
                    throw std::invalid_argument("a matrix is required "
                                                "(--matrix-json or --matrix-file)");
                dioph::TransformMatrix m =
                    dioph::matrix_from_json(load_json_arg(matrix_json, matrix_file));
                dioph::HomothetyCase hc = dioph::homothety_case(m);
                if (tr->got_subcommand(cls_cmd)) {
                    emit(dioph::homothety_to_json(hc));
                    return 0;
                }
                dioph::IntMatrix d = dioph::deformation_matrix(m, hc);
                emit(json{{"homothety", dioph::homothety_to_json(hc)},
                          {"deformation", dioph::int_matrix_to_json(d)}});
                return 0;
            }
            if (tr->got_subcommand(diag)) {
                auto b = branch == "minus" ? dioph::TanBranch::Minus : dioph::TanBranch::Plus;
                emit(dioph::diagonalization_to_json(
                    dioph::diagonalize_binary_quadratic(a11, a12, a22, b)));
                return 0;
            }
            if (tr->got_subcommand(appl) || tr->got_subcommand(ver)) {
                if (matrix_json.empty() && matrix_file.empty())
                    throw std::invalid_argument("a matrix is required "
                                                "(--matrix-json or --matrix-file)");
                dioph::Polynomial p = dioph::parse_equation(cfg.eq);
                dioph::IntAffine t;
                t.matrix = int_matrix_from_json(load_json_arg(matrix_json, matrix_file));
                t.translation = int_vector_from_csv(translate_csv, t.matrix.size());
                if (tr->got_subcommand(appl)) {
                    dioph::TransformedEquation te = dioph::apply_transform(p, t, !raw);
                    emit(dioph::transformed_to_json(p, t, te));
                    return 0;
                }
                dioph::Box box{cfg.N, dioph::BoxMode::IntegerBox};
                dioph::PreservationReport rep =
                    dioph::verify_count_preservation(p, t, box, cfg.engine_opts());
                emit(dioph::preservation_to_json(rep));
                return 0;
            }
        }

        if (app.got_subcommand(fam)) {
            if (fam->got_subcommand(lines)) {
                auto pts = dioph::hyperboloid_family_points(cfg.N);
                json rows = json::array();
                for (const auto& p : pts) rows.push_back(json::array({p[0], p[1], p[2]}));
                emit(json{{"equation", dioph::render(dioph::hyperboloid_unit_equation())},
                          {"N", cfg.N},
                          {"count", pts.size()},
                          {"points", std::move(rows)}});
                return 0;
            }
            if (fam->got_subcommand(roots)) {
                auto rs = dioph::power_equation_roots(mpz_class(lead_text),
                                                      mpz_class(constant_text), degree);
                json arr = json::array();
                for (const auto& r : rs) arr.push_back(r.get_str());
                emit(json{{"roots", std::move(arr)}});
                return 0;
            }
            dioph::Polynomial form = dioph::parse_equation(form_text);
            std::vector<mpz_class> base;
            {
                std::stringstream ss(base_csv);
                std::string item;
                while (std::getline(ss, item, ',')) base.emplace_back(item);
            }
            dioph::ScaledWitnesses w = dioph::scaled_witness_family(
                form, mpz_class(lead_text), mpz_class(constant_text), base,
                mpz_class(last_text), cfg.N);
            emit(dioph::witnesses_to_json(w));
            return 0;
        }
    } catch (const dioph::ParseError& e) {
        std::cerr << "equation error at byte " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const dioph::BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const json::parse_error& e) {
        std::cerr << "bad matrix JSON: " << e.what() << "\n";
        return in_transform ? kExitTransform : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return in_transform ? kExitTransform : kExitUsage;
    }
    return 0;
}
