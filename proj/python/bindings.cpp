#include "reflgroups/arrowarc.hpp"
#include "reflgroups/commands.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace reflgroups;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_python(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Tolerance tolerance(double eps_verify) {
    Tolerance tol;
    tol.eps_verify = eps_verify;
    tol.validate();
    return tol;
}

std::optional<int> dimension(int dim) { return dim > 0 ? std::optional<int>(dim) : std::nullopt; }

py::dict report_dict(const Report& r, const Tolerance& tol) {
    nlohmann::json j = report_to_json(r);
    j["classification"] = classification_json(r.input, tol);
    j["steps_valid"] = r.steps_valid;
    j["parity_ok"] = r.parity_ok;
    return to_python(j);
}

MatN oracle_matrix(const Expression& e) {
    switch (e.group) {
        case Group::E2: {
            const Isometry2 iso = word_to_isometry2(std::get<Word2>(e.word));
            MatN m = MatN::Identity(3, 3);
            m.topLeftCorner(2, 2) = iso.linear;
            m.topRightCorner(2, 1) = iso.translation;
            return m;
        }
        case Group::S2: return word_matrix_sphere(std::get<SphereWord>(e.word));
        case Group::SO3: return word_matrix_so3(std::get<LineWord>(e.word));
        case Group::ON: return word_matrix_n(std::get<WordN>(e.word));
    }
    return {};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reflection words in E2, S2, SO(3) and O(n): normal forms, classification and audits";

    static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def(
        "parse", [](const std::string& text, int dim) { return to_python(expression_to_json(parse_expression(text, dimension(dim)))); },
        py::arg("text"), py::arg("dim") = 0, "Parse an expression into the JSON word schema.");
    m.def(
        "format", [](const py::object& word) { return format_expression(expression_from_json(from_python(word))); },
        py::arg("word"), "Print a JSON-schema word as an expression.");
    m.def(
        "normalize",
        [](const std::string& text, double tol, int dim) {
            const Tolerance t = tolerance(tol);
            return report_dict(make_report(parse_expression(text, dimension(dim)), t), t);
        },
        py::arg("text"), py::arg("tol") = kDefaultTolerance.eps_verify, py::arg("dim") = 0,
        "Normalize a word; returns the report with trace, residual and classification.");
    m.def(
        "classify",
        [](const std::string& text, double tol, int dim) {
            return to_python(classification_json(parse_expression(text, dimension(dim)), tolerance(tol)));
        },
        py::arg("text"), py::arg("tol") = kDefaultTolerance.eps_verify, py::arg("dim") = 0);
    m.def(
        "compose",
        [](const std::string& a, const std::string& b, double tol) {
            const Tolerance t = tolerance(tol);
            return report_dict(make_report(compose_expressions(parse_expression(a), parse_expression(b)), t), t);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kDefaultTolerance.eps_verify,
        "Normalize the product a o b (b acts first).");
    m.def(
        "verify",
        [](const std::string& group, std::size_t count, std::size_t max_len, std::uint64_t seed, int dim, double tol) {
            const Group g = parse_group(group);
            const int n = g == Group::ON ? dim : (g == Group::E2 ? 2 : 3);
            if (n < 2) {
                throw Error(ErrorKind::DimensionMismatch, "dim >= 2 is required for group on");
            }
            return to_python(summary_to_json(verify_batch(g, n, count, max_len, seed, tolerance(tol))));
        },
        py::arg("group"), py::arg("count") = 1000, py::arg("max_len") = 7, py::arg("seed") = 42, py::arg("dim") = 0,
        py::arg("tol") = kDefaultTolerance.eps_verify, "Seeded randomized verification batch.");
    m.def(
        "oracle_matrix", [](const std::string& text, int dim) { return oracle_matrix(parse_expression(text, dimension(dim))); },
        py::arg("text"), py::arg("dim") = 0,
        "Matrix of the word's isometry (homogeneous 3x3 for E2).");
    m.def(
        "decompose",
        [](const MatN& matrix) {
            std::vector<VecN> normals;
            for (const auto& h : decompose(matrix).mirrors) {
                normals.push_back(h.normal());
            }
            return normals;
        },
        py::arg("matrix"), "Hyperplane normals, in acting order, whose reflections compose to the orthogonal matrix.");
    m.def(
        "triangle_compose",
        [](const Vec3& u_tail, const Vec3& u_head, const Vec3& v_tail, const Vec3& v_head) {
            const ArrowArc w = triangle_compose(ArrowArc(u_tail, u_head), ArrowArc(v_tail, v_head));
            return std::make_pair(w.tail(), w.head());
        },
        py::arg("u_tail"), py::arg("u_head"), py::arg("v_tail"), py::arg("v_head"),
        "Arc of V o U from arcs of U and V.");
    m.def(
        "reduce",
        [](const std::string& text, double tol) {
            const Tolerance t = tolerance(tol);
            const Expression e = parse_expression(text);
            if (e.group != Group::ON) {
                throw Error(ErrorKind::DimensionMismatch, "reduce requires an ON expression");
            }
            const WordN& w = std::get<WordN>(e.word);
            Trace<Hyperplane> trace;
            const WordN out = reduce_n_plus_one(w, t, &trace);
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& step : trace) {
                nlohmann::json removed = nlohmann::json::array(), inserted = nlohmann::json::array();
                for (const auto& h : step.removed) removed.push_back(mirror_to_json(h));
                for (const auto& h : step.inserted) inserted.push_back(mirror_to_json(h));
                steps.push_back({{"relation", to_string(step.relation)},
                                 {"position", step.position},
                                 {"removed", removed},
                                 {"inserted", inserted},
                                 {"valid", is_valid_step_n(step, t)}});
            }
            const Expression result{Group::ON, out};
            return to_python({{"input", expression_to_json(e)},
                              {"reduced", expression_to_json(result)},
                              {"residual", oracle_residual(e, result)},
                              {"steps", steps}});
        },
        py::arg("text"), py::arg("tol") = kDefaultTolerance.eps_verify,
        "Rewrite an ON word of n+1 mirrors into n-1 mirrors by pencil and involution moves.");
    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int status = run_command(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end; returns (status, stdout, stderr).");
}
