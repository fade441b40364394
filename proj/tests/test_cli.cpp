#include <doctest.h>

#include "golden.hpp"
#include "oracles.hpp"
#include "reflgroups/commands.hpp"
#include "reflgroups/sampling.hpp"

#include <sstream>

using namespace reflgroups;
using nlohmann::json;

namespace {

int run(const std::vector<std::string>& args, std::string* out = nullptr, std::string* err = nullptr) {
    std::ostringstream o, e;
    const int status = run_command(args, o, e);
    if (out != nullptr) *out = o.str();
    if (err != nullptr) *err = e.str();
    return status;
}

}  // namespace

TEST_CASE("parse_expression reads right to left") {
    const Expression e = parse_expression("E2: refl(line(1,0,2)) * refl(line(1,0,0))");
    CHECK(e.group == Group::E2);
    const auto& w = std::get<Word2>(e.word);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Line2(1, 0, 0));
    CHECK(w[1] == Line2(1, 0, 2));

    const Expression s = parse_expression("SO3: refl(axis(0,0,1))");
    CHECK(s.length() == 1);
    CHECK(s.dimension() == 3);

    const Expression n = parse_expression("ON(4): refl(hyper(1, 0, 0, 0))");
    CHECK(n.dimension() == 4);
    CHECK(parse_expression("ON: refl(hyper(1,0,0))").dimension() == 3);
    CHECK(parse_expression("  s2 :refl( circle (0, 0, 1) )").length() == 1);
    CHECK(parse_expression("E2: id").length() == 0);
}

TEST_CASE("parse_expression errors") {
    auto kind_of = [](const std::string& text, std::optional<int> dim = std::nullopt) {
        try {
            parse_expression(text, dim);
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("no error for " << text);
        return ErrorKind::DegenerateInput;
    };
    CHECK(kind_of("E2: refl(line(0,0,0))") == ErrorKind::DegenerateInput);
    CHECK(kind_of("E2: refl(line(1,0))") == ErrorKind::DimensionMismatch);
    CHECK(kind_of("E2: refl(line(1,0,0)") == ErrorKind::SyntaxError);
    CHECK(kind_of("E2 refl(line(1,0,0))") == ErrorKind::SyntaxError);
    CHECK(kind_of("E3: refl(line(1,0,0))") == ErrorKind::SyntaxError);
    CHECK(kind_of("E2: refl(circle(1,0,0))") == ErrorKind::SyntaxError);
    CHECK(kind_of("ON(3): refl(hyper(1,0))") == ErrorKind::DimensionMismatch);
    CHECK(kind_of("ON(3): refl(hyper(1,0,0))", 4) == ErrorKind::DimensionMismatch);
    CHECK(kind_of("SO3: refl(axis(1,0,0)) *") == ErrorKind::SyntaxError);
    CHECK(kind_of("SO3: refl(axis(1,0,0)) extra") == ErrorKind::SyntaxError);

    try {
        parse_expression("E2: refl(line(1,0,0)) * refl(lin(1,0,0))");
    } catch (const ParseError& e) {
        CHECK(e.position() == 29);
    }
}

TEST_CASE("print then parse is a fixed point") {
    Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const std::size_t len = static_cast<std::size_t>(i % 7);
        const std::vector<Expression> cases{{Group::E2, random_word2(rng, len)},
                                            {Group::S2, random_sphere_word(rng, len)},
                                            {Group::SO3, random_line_word(rng, len)},
                                            {Group::ON, random_word_n(rng, 2 + i % 6, len)}};
        for (const auto& e : cases) {
            const std::string text = format_expression(e);
            const Expression back = parse_expression(text);
            CHECK(format_expression(back) == text);
            CHECK(expression_to_json(back) == expression_to_json(e));
            const Expression from_json = expression_from_json(expression_to_json(e));
            CHECK(format_expression(from_json) == text);
        }
    }
}

TEST_CASE("JSON word schema") {
    const json j = expression_to_json(parse_expression("E2: refl(line(0,1,0))"));
    CHECK(j["group"] == "e2");
    CHECK(j["mirrors"][0]["normal"] == json::array({0.0, 1.0}));
    CHECK(j["mirrors"][0]["offset"] == 0.0);
    const json on = expression_to_json(parse_expression("ON(3): refl(hyper(0,0,2))"));
    CHECK(on["dim"] == 3);
    CHECK(on["mirrors"][0]["normal"] == json::array({0.0, 0.0, 1.0}));
}

TEST_CASE("report traces replay to the normalized word") {
    Rng rng(29);
    for (int i = 0; i < 60; ++i) {
        const std::size_t len = static_cast<std::size_t>(i % 9);
        const std::vector<Expression> cases{{Group::E2, random_word2(rng, len)},
                                            {Group::S2, random_sphere_word(rng, len)},
                                            {Group::SO3, random_line_word(rng, len)},
                                            {Group::ON, random_word_n(rng, 3 + i % 4, len)}};
        for (const auto& e : cases) {
            const json report = report_to_json(make_report(e));
            json word = expression_to_json(e);
            for (const auto& step : report["trace"]) {
                auto& mirrors = word["mirrors"];
                const std::size_t pos = step["position"];
                const auto& removed = step["removed"];
                REQUIRE(pos + removed.size() <= mirrors.size());
                for (std::size_t k = 0; k < removed.size(); ++k) {
                    CHECK(mirrors[pos + k] == removed[k]);
                }
                json next = json::array();
                for (std::size_t k = 0; k < pos; ++k) next.push_back(mirrors[k]);
                for (const auto& m : step["inserted"]) next.push_back(m);
                for (std::size_t k = pos + removed.size(); k < mirrors.size(); ++k) next.push_back(mirrors[k]);
                mirrors = next;
            }
            CHECK(word == report["normalized"]);
            CHECK(report["residual"].get<double>() <= 1e-8);
        }
    }
}

TEST_CASE("documented invocations") {
    std::string out;
    CHECK(run({"--json", "normalize", "E2: refl(line(0,1,0)) * refl(line(0,1,0))"}, &out) == 0);
    const json j = json::parse(out);
    CHECK(j["normalized"]["mirrors"].empty());
    CHECK(j["residual"] == 0.0);
    REQUIRE(j["trace"].size() == 1);
    CHECK(j["trace"][0]["relation"] == "involution");

    CHECK(run({"classify", "E2: refl(line(1,0,1)) * refl(line(1,0,0))"}, &out) == 0);
    const json c = json::parse(out);
    CHECK(c["class"] == "translation");
    CHECK(c["vector"] == json::array({2.0, 0.0}));

    CHECK(run({"--json", "verify", "--group", "so3", "--count", "1000", "--max-len", "7", "--seed", "42"}, &out) == 0);
    const json v = json::parse(out);
    CHECK(v["max_residual"].get<double>() <= 1e-8);
    CHECK(v["status"] == "ok");
}

TEST_CASE("verify is reproducible") {
    std::string a, b;
    for (const char* group : {"e2", "s2", "so3"}) {
        run({"verify", "--group", group, "--count", "200", "--seed", "42"}, &a);
        run({"verify", "--group", group, "--count", "200", "--seed", "42"}, &b);
        CHECK(a == b);
    }
    run({"--dim", "6", "verify", "--group", "on", "--count", "200", "--seed", "42"}, &a);
    run({"verify", "--group", "on", "--dim", "6", "--count", "200", "--seed", "42"}, &b);
    CHECK(a == b);
}

TEST_CASE("errors are reported as JSON on stderr") {
    std::string out, err;
    CHECK(run({"normalize", "E2: refl(line(1,0,0)"}, &out, &err) == 2);
    CHECK(out.empty());
    const json e = json::parse(err);
    CHECK(e["status"] == "error");
    CHECK(e["kind"] == "SyntaxError");
    CHECK(e.contains("position"));
    CHECK(run({"--tol", "-1", "normalize", "E2: id"}, &out, &err) == 2);
    CHECK(run({"compose", "E2: id", "S2: id"}, &out, &err) == 2);
    CHECK(json::parse(err)["kind"] == "DimensionMismatch");
}

TEST_CASE("golden files") {
    for (const auto& o : golden::run_all(REFLGROUPS_GOLDEN_DIR)) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.ok);
    }
}
