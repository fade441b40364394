#include "reflgroups/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace reflgroups {

const char* group_name(Group g) {
    switch (g) {
        case Group::E2: return "e2";
        case Group::S2: return "s2";
        case Group::SO3: return "so3";
        case Group::ON: return "on";
    }
    return "?";
}

Group parse_group(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "e2") return Group::E2;
    if (lower == "s2") return Group::S2;
    if (lower == "so3") return Group::SO3;
    if (lower == "on") return Group::ON;
    throw Error(ErrorKind::SyntaxError, "unknown group '" + std::string(name) + "'");
}

int Expression::dimension() const {
    switch (group) {
        case Group::E2: return 2;
        case Group::S2:
        case Group::SO3: return 3;
        case Group::ON: return std::get<WordN>(word).dimension;
    }
    return 0;
}

std::size_t Expression::length() const {
    return std::visit(
        [](const auto& w) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(w)>, WordN>) {
                return w.mirrors.size();
            } else {
                return w.size();
            }
        },
        word);
}

namespace {

const char* mirror_keyword(Group g) {
    switch (g) {
        case Group::E2: return "line";
        case Group::S2: return "circle";
        case Group::SO3: return "axis";
        case Group::ON: return "hyper";
    }
    return "?";
}

class Parser {
  public:
    Parser(std::string_view text, std::optional<int> dimension) : text_(text), dimension_(dimension) {}

    Expression parse() {
        Expression e;
        const std::size_t group_pos = skip();
        std::string group = identifier();
        try {
            e.group = parse_group(group);
        } catch (const Error&) {
            fail(ErrorKind::SyntaxError, "unknown group '" + group + "'", group_pos);
        }
        if (e.group == Group::ON && peek('(')) {
            expect('(');
            const std::size_t at = skip();
            const double n = number();
            if (n != std::floor(n) || n < 2 || n > 1024) {
                fail(ErrorKind::DimensionMismatch, "invalid dimension", at);
            }
            if (dimension_ && *dimension_ != static_cast<int>(n)) {
                fail(ErrorKind::DimensionMismatch, "dimension conflicts with --dim", at);
            }
            dimension_ = static_cast<int>(n);
            expect(')');
        }
        if (e.group != Group::ON && dimension_ && *dimension_ != (e.group == Group::E2 ? 2 : 3)) {
            fail(ErrorKind::DimensionMismatch, "dimension conflicts with the group", group_pos);
        }
        expect(':');

        std::vector<std::vector<double>> terms;
        std::vector<std::size_t> positions;
        parse_term(e.group, terms, positions);
        while (peek('*')) {
            expect('*');
            parse_term(e.group, terms, positions);
        }
        if (skip() != text_.size()) {
            fail(ErrorKind::SyntaxError, "unexpected trailing input", pos_);
        }
        // Text order is operator order; the word is stored in acting order.
        std::reverse(terms.begin(), terms.end());
        std::reverse(positions.begin(), positions.end());
        build(e, terms, positions);
        return e;
    }

  private:
    [[noreturn]] void fail(ErrorKind kind, const std::string& what, std::size_t at) const {
        throw ParseError(kind, what, at);
    }

    std::size_t skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return pos_;
    }

    bool peek(char c) { return skip() < text_.size() && text_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) {
            fail(ErrorKind::SyntaxError, std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string identifier() {
        const std::size_t start = skip();
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail(ErrorKind::SyntaxError, "expected identifier", start);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    double number() {
        const std::size_t start = skip();
        std::size_t p = pos_;
        if (p < text_.size() && text_[p] == '+') {
            ++p;
        }
        double value = 0.0;
        const auto [end, ec] = std::from_chars(text_.data() + p, text_.data() + text_.size(), value);
        if (ec != std::errc() || !std::isfinite(value)) {
            fail(ErrorKind::SyntaxError, "expected number", start);
        }
        pos_ = static_cast<std::size_t>(end - text_.data());
        return value;
    }

    void parse_term(Group group, std::vector<std::vector<double>>& terms, std::vector<std::size_t>& positions) {
        const std::size_t start = skip();
        const std::string head = identifier();
        if (head == "id") {
            return;
        }
        if (head != "refl") {
            fail(ErrorKind::SyntaxError, "expected 'refl' or 'id'", start);
        }
        expect('(');
        const std::size_t mirror_pos = skip();
        const std::string kind = identifier();
        if (kind != mirror_keyword(group)) {
            fail(ErrorKind::SyntaxError, std::string("expected '") + mirror_keyword(group) + "' mirror", mirror_pos);
        }
        expect('(');
        std::vector<double> values{number()};
        while (peek(',')) {
            expect(',');
            values.push_back(number());
        }
        expect(')');
        expect(')');
        const std::size_t expected = group == Group::ON ? (dimension_ ? static_cast<std::size_t>(*dimension_) : values.size())
                                                        : 3;
        if (values.size() != expected || (group == Group::ON && values.size() < 2)) {
            fail(ErrorKind::DimensionMismatch, "mirror has " + std::to_string(values.size()) + " components", mirror_pos);
        }
        if (group == Group::ON && !dimension_) {
            dimension_ = static_cast<int>(values.size());
        }
        terms.push_back(std::move(values));
        positions.push_back(mirror_pos);
    }

    void build(Expression& e, const std::vector<std::vector<double>>& terms, const std::vector<std::size_t>& positions) {
        auto guarded = [&](std::size_t i, auto make) {
            try {
                return make(terms[i]);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& err) {
                fail(err.kind(), err.what(), positions[i]);
            }
        };
        switch (e.group) {
            case Group::E2: {
                Word2 w;
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    w.push_back(guarded(i, [](const auto& v) { return Line2(v[0], v[1], v[2]); }));
                }
                e.word = std::move(w);
                break;
            }
            case Group::S2: {
                SphereWord w;
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    w.push_back(guarded(i, [](const auto& v) { return GreatCircle(v[0], v[1], v[2]); }));
                }
                e.word = std::move(w);
                break;
            }
            case Group::SO3: {
                LineWord w;
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    w.push_back(guarded(i, [](const auto& v) { return AxisLine(v[0], v[1], v[2]); }));
                }
                e.word = std::move(w);
                break;
            }
            case Group::ON: {
                if (!dimension_) {
                    fail(ErrorKind::DimensionMismatch, "dimension of an empty ON word is unknown", 0);
                }
                WordN w{*dimension_, {}};
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    w.mirrors.push_back(guarded(i, [](const auto& v) {
                        return Hyperplane(Eigen::Map<const VecN>(v.data(), static_cast<Eigen::Index>(v.size())));
                    }));
                }
                e.word = std::move(w);
                break;
            }
        }
    }

    std::string_view text_;
    std::optional<int> dimension_;
    std::size_t pos_ = 0;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

template <class Derived>
std::string num_list(const Eigen::MatrixBase<Derived>& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + num(v[i]);
    }
    return out;
}

template <class Mirror>
std::string format_terms(const std::vector<Mirror>& word) {
    if (word.empty()) {
        return "id";
    }
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out += (it == word.rbegin() ? "" : " * ") + ("refl(" + format_mirror(*it) + ")");
    }
    return out;
}

template <class Derived>
nlohmann::json vec_json(const Eigen::MatrixBase<Derived>& v) {
    return std::vector<double>(v.derived().data(), v.derived().data() + v.size());
}

VecN json_vec(const nlohmann::json& j) {
    const auto values = j.get<std::vector<double>>();
    return Eigen::Map<const VecN>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

std::string format_mirror(const Line2& l) {
    return "line(" + num(l.normal().x()) + ", " + num(l.normal().y()) + ", " + num(l.offset()) + ")";
}
std::string format_mirror(const GreatCircle& c) { return "circle(" + num_list(c.pole()) + ")"; }
std::string format_mirror(const AxisLine& a) { return "axis(" + num_list(a.direction()) + ")"; }
std::string format_mirror(const Hyperplane& h) { return "hyper(" + num_list(h.normal()) + ")"; }

Expression parse_expression(std::string_view text, std::optional<int> dimension) {
    return Parser(text, dimension).parse();
}

std::string format_expression(const Expression& e) {
    switch (e.group) {
        case Group::E2: return "E2: " + format_terms(std::get<Word2>(e.word));
        case Group::S2: return "S2: " + format_terms(std::get<SphereWord>(e.word));
        case Group::SO3: return "SO3: " + format_terms(std::get<LineWord>(e.word));
        case Group::ON: {
            const auto& w = std::get<WordN>(e.word);
            return "ON(" + std::to_string(w.dimension) + "): " + format_terms(w.mirrors);
        }
    }
    return {};
}

nlohmann::json mirror_to_json(const Line2& l) { return {{"normal", vec_json(l.normal())}, {"offset", l.offset()}}; }
nlohmann::json mirror_to_json(const GreatCircle& c) { return {{"pole", vec_json(c.pole())}}; }
nlohmann::json mirror_to_json(const AxisLine& a) { return {{"direction", vec_json(a.direction())}}; }
nlohmann::json mirror_to_json(const Hyperplane& h) { return {{"normal", vec_json(h.normal())}}; }

nlohmann::json expression_to_json(const Expression& e) {
    nlohmann::json j{{"group", group_name(e.group)}};
    std::visit(
        [&](const auto& w) {
            nlohmann::json mirrors = nlohmann::json::array();
            if constexpr (std::is_same_v<std::decay_t<decltype(w)>, WordN>) {
                j["dim"] = w.dimension;
                for (const auto& m : w.mirrors) mirrors.push_back(mirror_to_json(m));
            } else {
                for (const auto& m : w) mirrors.push_back(mirror_to_json(m));
            }
            j["mirrors"] = std::move(mirrors);
        },
        e.word);
    return j;
}

Expression expression_from_json(const nlohmann::json& j) {
    Expression e;
    try {
        e.group = parse_group(j.at("group").get<std::string>());
        const auto& mirrors = j.at("mirrors");
        switch (e.group) {
            case Group::E2: {
                Word2 w;
                for (const auto& m : mirrors) {
                    const VecN n = json_vec(m.at("normal"));
                    if (n.size() != 2) throw Error(ErrorKind::DimensionMismatch, "line normal must have 2 components");
                    w.emplace_back(Vec2(n[0], n[1]), m.at("offset").get<double>());
                }
                e.word = std::move(w);
                break;
            }
            case Group::S2: {
                SphereWord w;
                for (const auto& m : mirrors) {
                    const VecN p = json_vec(m.at("pole"));
                    if (p.size() != 3) throw Error(ErrorKind::DimensionMismatch, "pole must have 3 components");
                    w.emplace_back(Vec3(p));
                }
                e.word = std::move(w);
                break;
            }
            case Group::SO3: {
                LineWord w;
                for (const auto& m : mirrors) {
                    const VecN d = json_vec(m.at("direction"));
                    if (d.size() != 3) throw Error(ErrorKind::DimensionMismatch, "direction must have 3 components");
                    w.emplace_back(Vec3(d));
                }
                e.word = std::move(w);
                break;
            }
            case Group::ON: {
                WordN w{j.at("dim").get<int>(), {}};
                for (const auto& m : mirrors) {
                    w.mirrors.emplace_back(json_vec(m.at("normal")));
                }
                w.validate();
                e.word = std::move(w);
                break;
            }
        }
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::SyntaxError, std::string("malformed word JSON: ") + ex.what());
    }
    return e;
}

}  // namespace reflgroups
