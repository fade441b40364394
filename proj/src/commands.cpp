#include "reflgroups/commands.hpp"

#include "reflgroups/arrowarc.hpp"
#include "reflgroups/sampling.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace reflgroups {

namespace {

using nlohmann::json;

template <class Mirror>
struct Ops;

template <>
struct Ops<Line2> {
    static Word2 normalize(const Word2& w, int, const Tolerance& tol, Trace<Line2>* trace) {
        return normalize2(w, tol, trace);
    }
    static bool valid(const RewriteStep<Line2>& s, const Tolerance& tol) { return is_valid_step2(s, tol); }
    static Expression wrap(Word2 w, int) { return {Group::E2, std::move(w)}; }
};

template <>
struct Ops<GreatCircle> {
    static SphereWord normalize(const SphereWord& w, int, const Tolerance& tol, Trace<GreatCircle>* trace) {
        return normalize_sphere(w, tol, trace);
    }
    static bool valid(const RewriteStep<GreatCircle>& s, const Tolerance& tol) { return is_valid_step_sphere(s, tol); }
    static Expression wrap(SphereWord w, int) { return {Group::S2, std::move(w)}; }
};

template <>
struct Ops<AxisLine> {
    static LineWord normalize(const LineWord& w, int, const Tolerance& tol, Trace<AxisLine>* trace) {
        return normalize_so3(w, tol, trace);
    }
    static bool valid(const RewriteStep<AxisLine>& s, const Tolerance& tol) { return is_valid_step_so3(s, tol); }
    static Expression wrap(LineWord w, int) { return {Group::SO3, std::move(w)}; }
};

template <>
struct Ops<Hyperplane> {
    static std::vector<Hyperplane> normalize(const std::vector<Hyperplane>& w, int dim, const Tolerance& tol,
                                             Trace<Hyperplane>* trace) {
        return normalize_n({dim, w}, tol, trace).mirrors;
    }
    static bool valid(const RewriteStep<Hyperplane>& s, const Tolerance& tol) { return is_valid_step_n(s, tol); }
    static Expression wrap(std::vector<Hyperplane> w, int dim) { return {Group::ON, WordN{dim, std::move(w)}}; }
};

template <class F>
decltype(auto) visit_mirrors(const Expression& e, F&& f) {
    return std::visit(
        [&](const auto& w) -> decltype(auto) {
            if constexpr (std::is_same_v<std::decay_t<decltype(w)>, WordN>) {
                return f(w.mirrors, w.dimension);
            } else {
                return f(w, e.dimension());
            }
        },
        e.word);
}

double snap(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

template <class Derived>
json vec_json(const Eigen::MatrixBase<Derived>& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(snap(v[i]));
    }
    return out;
}

json rotation_json(const Vec3& axis, double angle) {
    return {{"class", "rotation"}, {"axis", vec_json(axis)}, {"angle", snap(angle)}};
}

template <class Mirror>
json mirrors_json(const std::vector<Mirror>& mirrors) {
    json out = json::array();
    for (const auto& m : mirrors) {
        out.push_back(mirror_to_json(m));
    }
    return out;
}

template <class Mirror>
std::string mirrors_text(const std::vector<Mirror>& mirrors) {
    std::string out = "[";
    for (std::size_t i = 0; i < mirrors.size(); ++i) {
        out += (i ? ", " : "") + format_mirror(mirrors[i]);
    }
    return out + "]";
}

bool determinant_matches(const Expression& e, const Tolerance& tol) {
    const double expected = e.group == Group::SO3 ? 1.0 : (e.length() % 2 == 0 ? 1.0 : -1.0);
    return std::abs(oracle_determinant(e) - expected) <= tol.eps_verify;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", snap(x));
    return buf;
}

std::string vec_text(const Vec3& v) { return "(" + fixed(v.x()) + ", " + fixed(v.y()) + ", " + fixed(v.z()) + ")"; }

Rotation3 word_rotation(const LineWord& normal, const Tolerance& tol) {
    if (normal.empty()) {
        return Rotation3::identity();
    }
    if (normal.size() == 1) {
        return {normal[0].direction(), kPi};
    }
    return compose_line_reflections(normal[0], normal[1], tol);
}

}  // namespace

double oracle_determinant(const Expression& e) {
    switch (e.group) {
        case Group::E2: return word_to_isometry2(std::get<Word2>(e.word)).linear.determinant();
        case Group::S2: return word_matrix_sphere(std::get<SphereWord>(e.word)).determinant();
        case Group::SO3: return word_matrix_so3(std::get<LineWord>(e.word)).determinant();
        case Group::ON: return word_matrix_n(std::get<WordN>(e.word)).determinant();
    }
    return 0.0;
}

double oracle_residual(const Expression& a, const Expression& b) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (a.group != b.group || a.dimension() != b.dimension()) {
        return inf;
    }
    switch (a.group) {
        case Group::E2:
            return isometry_residual2(word_to_isometry2(std::get<Word2>(a.word)),
                                      word_to_isometry2(std::get<Word2>(b.word)));
        case Group::S2: {
            const Mat3 ma = word_matrix_sphere(std::get<SphereWord>(a.word));
            const Mat3 mb = word_matrix_sphere(std::get<SphereWord>(b.word));
            return (ma * mb.transpose()).determinant() < 0 ? inf : rotation_distance(ma, mb);
        }
        case Group::SO3:
            return rotation_distance(word_quaternion_so3(std::get<LineWord>(a.word)),
                                     word_quaternion_so3(std::get<LineWord>(b.word)));
        case Group::ON:
            return (word_matrix_n(std::get<WordN>(a.word)) - word_matrix_n(std::get<WordN>(b.word))).norm();
    }
    return inf;
}

std::size_t normal_length_bound(const Expression& e) {
    switch (e.group) {
        case Group::E2:
        case Group::S2: return 3;
        case Group::SO3: return 2;
        case Group::ON: return static_cast<std::size_t>(e.dimension());
    }
    return 0;
}

Report make_report(const Expression& e, const Tolerance& tol) {
    Report r;
    r.input = e;
    r.trace = json::array();
    visit_mirrors(e, [&](const auto& mirrors, int dim) {
        using Mirror = typename std::decay_t<decltype(mirrors)>::value_type;
        Trace<Mirror> trace;
        auto normal = Ops<Mirror>::normalize(mirrors, dim, tol, &trace);
        r.normalized = Ops<Mirror>::wrap(normal, dim);
        r.residual = oracle_residual(e, r.normalized);

        std::vector<Mirror> current = mirrors;
        for (const auto& step : trace) {
            r.steps_valid = r.steps_valid && Ops<Mirror>::valid(step, tol);
            apply_step(current, step);
            const Expression mid = Ops<Mirror>::wrap(current, dim);
            r.parity_ok = r.parity_ok && determinant_matches(mid, tol);
            r.max_step_residual = std::max(r.max_step_residual, oracle_residual(e, mid));
            r.trace.push_back({{"relation", to_string(step.relation)},
                               {"position", step.position},
                               {"removed", mirrors_json(step.removed)},
                               {"inserted", mirrors_json(step.inserted)}});
            r.trace_text.push_back(std::string(to_string(step.relation)) + " @" + std::to_string(step.position) + ": " +
                                   mirrors_text(step.removed) + " -> " + mirrors_text(step.inserted));
        }
        r.steps_valid = r.steps_valid && current == normal;
        r.parity_ok = r.parity_ok && determinant_matches(e, tol);
    });
    return r;
}

json report_to_json(const Report& r) {
    return {{"status", "ok"},
            {"input", expression_to_json(r.input)},
            {"normalized", expression_to_json(r.normalized)},
            {"length", r.normalized.length()},
            {"residual", r.residual},
            {"trace", r.trace}};
}

json classification_json(const Expression& e, const Tolerance& tol) {
    switch (e.group) {
        case Group::E2:
            return std::visit(
                [](const auto& c) -> json {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, class2::Identity>) {
                        return {{"class", "identity"}};
                    } else if constexpr (std::is_same_v<C, class2::Reflection>) {
                        return {{"class", "reflection"}, {"axis", mirror_to_json(c.axis)}};
                    } else if constexpr (std::is_same_v<C, class2::Translation>) {
                        return {{"class", "translation"}, {"vector", vec_json(c.vector)}};
                    } else if constexpr (std::is_same_v<C, class2::Rotation>) {
                        return {{"class", "rotation"}, {"center", vec_json(c.center)}, {"angle", snap(c.angle)}};
                    } else {
                        return {{"class", "glide"}, {"axis", mirror_to_json(c.axis)}, {"vector", vec_json(c.vector)}};
                    }
                },
                classify2(std::get<Word2>(e.word), tol));
        case Group::S2:
            return std::visit(
                [](const auto& c) -> json {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, class_s2::Identity>) {
                        return {{"class", "identity"}};
                    } else if constexpr (std::is_same_v<C, class_s2::Reflection>) {
                        return {{"class", "reflection"}, {"circle", mirror_to_json(c.circle)}};
                    } else if constexpr (std::is_same_v<C, class_s2::Rotation>) {
                        return rotation_json(c.axis, c.angle);
                    } else {
                        return {{"class", "glide"}, {"axis", vec_json(c.axis)}, {"angle", snap(c.angle)}};
                    }
                },
                classify_sphere(std::get<SphereWord>(e.word), tol));
        case Group::SO3: {
            const Rotation3 r = word_rotation(normalize_so3(std::get<LineWord>(e.word), tol), tol);
            return r.is_identity() ? json{{"class", "identity"}} : rotation_json(r.axis(), r.angle());
        }
        case Group::ON: {
            const WordN& w = std::get<WordN>(e.word);
            const SpectralSplit split = spectral_split(word_matrix_n(w), tol);
            int fixed_dim = 0;
            int negated = 0;
            json angles = json::array();
            for (const auto& block : split.blocks) {
                if (const auto* f = std::get_if<blocks::Fixed>(&block)) {
                    fixed_dim += static_cast<int>(f->basis.cols());
                } else if (std::holds_alternative<blocks::NegatedLine>(block)) {
                    ++negated;
                } else {
                    angles.push_back(std::get<blocks::RotationPlane>(block).angle);
                }
            }
            const bool preserving = w.mirrors.size() % 2 == 0;
            if (fixed_dim == w.dimension) {
                return {{"class", "identity"}, {"det", 1}};
            }
            return {{"class", preserving ? "orientation_preserving" : "orientation_reversing"},
                    {"det", preserving ? 1 : -1},
                    {"fixed_dim", fixed_dim},
                    {"negated_lines", negated},
                    {"rotation_angles", angles}};
        }
    }
    return {};
}

Expression compose_expressions(const Expression& a, const Expression& b) {
    if (a.group != b.group || a.dimension() != b.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot compose words of different groups or dimensions");
    }
    return visit_mirrors(a, [&](const auto& outer, int dim) {
        using Mirror = typename std::decay_t<decltype(outer)>::value_type;
        std::vector<Mirror> product;
        visit_mirrors(b, [&](const auto& inner, int) {
            if constexpr (std::is_same_v<typename std::decay_t<decltype(inner)>::value_type, Mirror>) {
                product = inner;
            }
        });
        product.insert(product.end(), outer.begin(), outer.end());
        return Ops<Mirror>::wrap(std::move(product), dim);
    });
}

VerifySummary verify_batch(Group group, int dimension, std::size_t count, std::size_t max_len, std::uint64_t seed,
                           const Tolerance& tol) {
    VerifySummary s{group, dimension, count, max_len, seed, tol.eps_verify};
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, max_len);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = length(rng);
        Expression e;
        switch (group) {
            case Group::E2: e = {group, random_word2(rng, len)}; break;
            case Group::S2: e = {group, random_sphere_word(rng, len)}; break;
            case Group::SO3: e = {group, random_line_word(rng, len)}; break;
            case Group::ON: e = {group, random_word_n(rng, dimension, len)}; break;
        }
        const Report r = make_report(e, tol);
        const std::size_t out_len = r.normalized.length();
        s.max_residual = std::max({s.max_residual, r.residual, r.max_step_residual});
        s.max_normal_length = std::max(s.max_normal_length, out_len);
        s.invalid_steps += r.steps_valid ? 0 : 1;
        s.parity_violations += r.parity_ok ? 0 : 1;
        const bool parity_kept = group == Group::SO3 || out_len % 2 == len % 2;
        s.length_violations += (out_len <= normal_length_bound(e) && parity_kept) ? 0 : 1;
        s.residual_failures += std::max(r.residual, r.max_step_residual) <= tol.eps_verify ? 0 : 1;
    }
    return s;
}

json summary_to_json(const VerifySummary& s) {
    return {{"status", s.failures() == 0 ? "ok" : "fail"},
            {"group", group_name(s.group)},
            {"dim", s.dimension},
            {"count", s.count},
            {"max_len", s.max_len},
            {"seed", s.seed},
            {"tolerance", s.tolerance},
            {"max_residual", s.max_residual},
            {"max_normalized_length", s.max_normal_length},
            {"invalid_steps", s.invalid_steps},
            {"parity_violations", s.parity_violations},
            {"length_violations", s.length_violations},
            {"residual_failures", s.residual_failures}};
}

namespace {

struct Options {
    bool json = false;
    bool trace = false;
    double tol = kDefaultTolerance.eps_verify;
    int dim = 0;
    std::string group = "e2";
    std::size_t count = 1000;
    std::size_t max_len = 7;
    std::uint64_t seed = 42;
    std::string svg;
    std::vector<std::string> expressions;
};

json error_json(const std::string& kind, const std::string& message) {
    return {{"status", "error"}, {"kind", kind}, {"message", message}};
}

void print_report(const Report& r, const Options& opt, std::ostream& out, bool with_trace) {
    out << "input:      " << format_expression(r.input) << '\n'
        << "normalized: " << format_expression(r.normalized) << '\n'
        << "length:     " << r.normalized.length() << '\n'
        << "residual:   " << sci(r.residual) << '\n';
    if (with_trace) {
        out << "trace:" << (r.trace_text.empty() ? " (none)" : "") << '\n';
        for (const auto& line : r.trace_text) {
            out << "  " << line << '\n';
        }
    }
    (void)opt;
}

int finish(bool ok, std::ostream& err, const Options& opt) {
    if (!ok) {
        err << error_json("VerificationFailure", "oracle residual exceeds " + sci(opt.tol)).dump() << '\n';
        return 1;
    }
    return 0;
}

int cmd_normalize(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const Expression e = parse_expression(opt.expressions.at(0), opt.dim ? std::optional<int>(opt.dim) : std::nullopt);
    const Report r = make_report(e, tol);
    if (opt.json) {
        json j = report_to_json(r);
        j["classification"] = classification_json(e, tol);
        out << j.dump(2) << '\n';
    } else {
        print_report(r, opt, out, true);
    }
    return finish(r.residual <= tol.eps_verify, err, opt);
}

int cmd_classify(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const Expression e = parse_expression(opt.expressions.at(0), opt.dim ? std::optional<int>(opt.dim) : std::nullopt);
    const Report r = make_report(e, tol);
    const json payload = classification_json(e, tol);
    if (opt.json) {
        json j = report_to_json(r);
        j["classification"] = payload;
        if (!opt.trace) {
            j.erase("trace");
        }
        out << j.dump(2) << '\n';
    } else {
        out << payload.dump() << '\n';
        if (opt.trace) {
            for (const auto& line : r.trace_text) {
                out << "  " << line << '\n';
            }
        }
    }
    return finish(r.residual <= tol.eps_verify, err, opt);
}

int cmd_compose(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const std::optional<int> dim = opt.dim ? std::optional<int>(opt.dim) : std::nullopt;
    const Expression a = parse_expression(opt.expressions.at(0), dim);
    const Expression b = parse_expression(opt.expressions.at(1), dim);
    const Report r = make_report(compose_expressions(a, b), tol);
    if (opt.json) {
        json j = report_to_json(r);
        j["classification"] = classification_json(r.input, tol);
        out << j.dump(2) << '\n';
    } else {
        print_report(r, opt, out, opt.trace);
        out << "class:      " << classification_json(r.input, tol).dump() << '\n';
    }
    return finish(r.residual <= tol.eps_verify, err, opt);
}

int cmd_arc(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const Expression e = parse_expression(opt.expressions.at(0));
    if (e.group != Group::SO3) {
        throw Error(ErrorKind::DimensionMismatch, "arc requires an SO3 expression");
    }
    const LineWord& word = std::get<LineWord>(e.word);
    const Rotation3 rotation = word_rotation(normalize_so3(word, tol), tol);
    const ArrowArc arc = rotation_to_arc(rotation, std::nullopt, tol);
    const double residual = rotation_distance(to_quaternion(arc_to_rotation(arc, tol)), word_quaternion_so3(word));
    if (!opt.svg.empty()) {
        std::ofstream file(opt.svg);
        if (!file) {
            throw Error(ErrorKind::DegenerateInput, "cannot write " + opt.svg);
        }
        file << arcs_to_svg({arc});
    }
    if (opt.json) {
        json j{{"status", "ok"},
               {"input", expression_to_json(e)},
               {"rotation", rotation.is_identity() ? json{{"class", "identity"}}
                                                   : rotation_json(rotation.axis(), rotation.angle())},
               {"arc", {{"tail", vec_json(arc.tail())}, {"head", vec_json(arc.head())}, {"length", snap(arc.length())}}},
               {"residual", residual}};
        if (!opt.svg.empty()) {
            j["svg"] = opt.svg;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "input:    " << format_expression(e) << '\n';
        if (rotation.is_identity()) {
            out << "rotation: identity\n";
        } else {
            out << "rotation: axis " << vec_text(rotation.axis()) << " angle " << fixed(rotation.angle()) << '\n';
        }
        out << "arc:      " << vec_text(arc.tail()) << " -> " << vec_text(arc.head()) << '\n'
            << "length:   " << fixed(arc.length()) << '\n'
            << "residual: " << sci(residual) << '\n';
        if (!opt.svg.empty()) {
            out << "svg:      " << opt.svg << '\n';
        }
    }
    return finish(residual <= tol.eps_verify, err, opt);
}

int cmd_verify(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const Group group = parse_group(opt.group);
    int dim = group == Group::E2 ? 2 : 3;
    if (group == Group::ON) {
        if (opt.dim < 2) {
            throw Error(ErrorKind::DimensionMismatch, "--dim N (N >= 2) is required for group on");
        }
        dim = opt.dim;
    } else if (opt.dim != 0 && opt.dim != dim) {
        throw Error(ErrorKind::DimensionMismatch, "--dim conflicts with the group");
    }
    const VerifySummary s = verify_batch(group, dim, opt.count, opt.max_len, opt.seed, tol);
    if (opt.json) {
        out << summary_to_json(s).dump(2) << '\n';
    } else {
        out << "group:                 " << group_name(s.group) << '\n'
            << "dim:                   " << s.dimension << '\n'
            << "count:                 " << s.count << '\n'
            << "max-len:               " << s.max_len << '\n'
            << "seed:                  " << s.seed << '\n'
            << "tolerance:             " << sci(s.tolerance) << '\n'
            << "max residual:          " << sci(s.max_residual) << '\n'
            << "max normalized length: " << s.max_normal_length << '\n'
            << "invalid steps:         " << s.invalid_steps << '\n'
            << "parity violations:     " << s.parity_violations << '\n'
            << "length violations:     " << s.length_violations << '\n'
            << "residual failures:     " << s.residual_failures << '\n'
            << "status:                " << (s.failures() == 0 ? "ok" : "fail") << '\n';
    }
    if (s.failures() != 0) {
        err << error_json("VerificationFailure", std::to_string(s.failures()) + " failing samples").dump() << '\n';
        return 1;
    }
    return 0;
}

int cmd_reduce(const Options& opt, const Tolerance& tol, std::ostream& out, std::ostream& err) {
    const Expression e = parse_expression(opt.expressions.at(0), opt.dim ? std::optional<int>(opt.dim) : std::nullopt);
    if (e.group != Group::ON) {
        throw Error(ErrorKind::DimensionMismatch, "reduce requires an ON expression");
    }
    const WordN& w = std::get<WordN>(e.word);
    Trace<Hyperplane> trace;
    const WordN reduced = reduce_n_plus_one(w, tol, &trace);
    std::vector<Hyperplane> current = w.mirrors;
    const MatN target = word_matrix_n(w);
    double max_residual = 0.0;
    bool valid = true;
    json steps = json::array();
    if (!opt.json) {
        out << "input:   " << format_expression(e) << '\n';
    }
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& step = trace[i];
        const bool ok = is_valid_step_n(step, tol);
        valid = valid && ok;
        apply_step(current, step);
        const double residual = (word_matrix_n({w.dimension, current}) - target).norm();
        max_residual = std::max(max_residual, residual);
        const Expression mid{Group::ON, WordN{w.dimension, current}};
        if (opt.json) {
            steps.push_back({{"relation", to_string(step.relation)},
                             {"position", step.position},
                             {"removed", mirrors_json(step.removed)},
                             {"inserted", mirrors_json(step.inserted)},
                             {"length", current.size()},
                             {"valid", ok},
                             {"residual", residual}});
        } else {
            out << "step " << i + 1 << ": " << to_string(step.relation) << " @" << step.position
                << (ok ? "" : " (INVALID)") << ", length " << current.size() << ", residual " << sci(residual)
                << '\n'
                << "  " << format_expression(mid) << '\n';
        }
    }
    const Expression result{Group::ON, reduced};
    if (opt.json) {
        out << json{{"status", "ok"},
                    {"input", expression_to_json(e)},
                    {"reduced", expression_to_json(result)},
                    {"length", reduced.mirrors.size()},
                    {"residual", max_residual},
                    {"steps", steps}}
                   .dump(2)
            << '\n';
    } else {
        out << "reduced: " << format_expression(result) << '\n'
            << "length:  " << reduced.mirrors.size() << '\n'
            << "residual: " << sci(max_residual) << '\n';
    }
    return finish(valid && max_residual <= tol.eps_verify, err, opt);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Reflection words for isometry groups: normalize, classify, compose and verify"};
    app.name("reflgroups");
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Emit JSON output");
    app.add_flag("--trace", opt.trace, "Emit rewrite steps");
    app.add_option("--tol", opt.tol, "Oracle residual tolerance (overrides eps_verify)");
    app.add_option("--dim", opt.dim, "Dimension n for ON words");

    auto* normalize = app.add_subcommand("normalize", "Normalize a word and print the rewrite trace");
    normalize->add_option("expression", opt.expressions, "Reflection word")->required()->expected(1);
    auto* classify = app.add_subcommand("classify", "Classify the isometry of a word");
    classify->add_option("expression", opt.expressions, "Reflection word")->required()->expected(1);
    auto* compose = app.add_subcommand("compose", "Normalize the product A o B (B acts first)");
    compose->add_option("expressions", opt.expressions, "Two reflection words A B")->required()->expected(2);
    auto* arc = app.add_subcommand("arc", "Arrow-arc of an SO3 word");
    arc->add_option("expression", opt.expressions, "SO3 reflection word")->required()->expected(1);
    arc->add_option("--svg", opt.svg, "Write an SVG drawing of the arc");
    auto* verify = app.add_subcommand("verify", "Seeded randomized verification batch");
    verify->add_option("--group", opt.group, "e2, s2, so3 or on")
        ->check(CLI::IsMember({"e2", "s2", "so3", "on"}, CLI::ignore_case));
    verify->add_option("--count", opt.count, "Number of random words");
    verify->add_option("--max-len", opt.max_len, "Maximum word length");
    verify->add_option("--seed", opt.seed, "Random seed");
    auto* reduce = app.add_subcommand("reduce", "Reduce an ON word of n+1 mirrors to n-1 mirrors");
    reduce->add_option("expression", opt.expressions, "ON reflection word")->required()->expected(1);
    for (auto* sub : {normalize, classify, compose, arc, verify, reduce}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("UsageError", e.what()).dump() << '\n';
        return 2;
    }

    try {
        Tolerance tol;
        tol.eps_verify = opt.tol;
        tol.validate();
        if (normalize->parsed()) return cmd_normalize(opt, tol, out, err);
        if (classify->parsed()) return cmd_classify(opt, tol, out, err);
        if (compose->parsed()) return cmd_compose(opt, tol, out, err);
        if (arc->parsed()) return cmd_arc(opt, tol, out, err);
        if (verify->parsed()) return cmd_verify(opt, tol, out, err);
        if (reduce->parsed()) return cmd_reduce(opt, tol, out, err);
    } catch (const ParseError& e) {
        json j = error_json(to_string(e.kind()), e.what());
        j["position"] = e.position();
        err << j.dump() << '\n';
        return 2;
    } catch (const Error& e) {
        err << error_json(to_string(e.kind()), e.what()).dump() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace reflgroups
