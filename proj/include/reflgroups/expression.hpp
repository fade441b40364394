#pragma once

// Text and JSON forms of reflection words.
//
//   expr   := group ":" term { "*" term }
//   group  := "E2" | "S2" | "SO3" | "ON" [ "(" int ")" ]
//   term   := "refl" "(" mirror ")" | "id"
//   mirror := "line" "(" num "," num "," num ")"     normal x, normal y, offset
//           | "circle" "(" num "," num "," num ")"   pole
//           | "axis" "(" num "," num "," num ")"     direction
//           | "hyper" "(" num { "," num } ")"        normal
//
// "*" is operator composition: the leftmost term acts last.

#include "reflgroups/euclid2.hpp"
#include "reflgroups/orthon.hpp"
#include "reflgroups/so3.hpp"
#include "reflgroups/sphere.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace reflgroups {

enum class Group { E2, S2, SO3, ON };

const char* group_name(Group g);  ///< "e2", "s2", "so3", "on"
Group parse_group(std::string_view name);

/// Words are stored in acting order (element 0 acts first).
using AnyWord = std::variant<Word2, SphereWord, LineWord, WordN>;

struct Expression {
    Group group = Group::E2;
    AnyWord word;

    int dimension() const;
    std::size_t length() const;
};

class ParseError : public Error {
  public:
    ParseError(ErrorKind kind, const std::string& what, std::size_t position)
        : Error(kind, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Throws ParseError (SyntaxError, DimensionMismatch) or Error (DegenerateInput).
/// `dimension` fixes n for ON words and must agree with an explicit "ON(n)".
Expression parse_expression(std::string_view text, std::optional<int> dimension = std::nullopt);

/// Inverse of parse_expression; numbers are printed with round-trip precision.
std::string format_expression(const Expression& e);

std::string format_mirror(const Line2& l);
std::string format_mirror(const GreatCircle& c);
std::string format_mirror(const AxisLine& a);
std::string format_mirror(const Hyperplane& h);

nlohmann::json mirror_to_json(const Line2& l);
nlohmann::json mirror_to_json(const GreatCircle& c);
nlohmann::json mirror_to_json(const AxisLine& a);
nlohmann::json mirror_to_json(const Hyperplane& h);

/// {"group": "e2", "mirrors": [...]} (plus "dim" for ON words).
nlohmann::json expression_to_json(const Expression& e);
Expression expression_from_json(const nlohmann::json& j);

}  // namespace reflgroups
