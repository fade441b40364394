#pragma once

#include "reflgroups/numerics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace reflgroups {

/// The elementary relations a reflection word may be rewritten with.
enum class Relation {
    Involution,  ///< [x, x] -> []
    Pencil,      ///< [a, b] -> [c, d], all four mirrors in one pencil with equal gaps
    PolarFrame,  ///< [k] -> [b, c] for pairwise orthogonal lines k, b, c (SO(3) only)
};

const char* to_string(Relation relation);

/// One rewrite applied at `position`: `removed` is replaced by `inserted`.
template <class Mirror>
struct RewriteStep {
    Relation relation;
    std::size_t position;
    std::vector<Mirror> removed;
    std::vector<Mirror> inserted;
};

template <class Mirror>
using Trace = std::vector<RewriteStep<Mirror>>;

/// A word of mirrors edited in place by elementary relations, each of which
/// is appended to an optional trace.
template <class Mirror>
class Rewriter {
  public:
    explicit Rewriter(std::vector<Mirror> word, Trace<Mirror>* trace = nullptr)
        : word_(std::move(word)), trace_(trace) {}

    const std::vector<Mirror>& word() const { return word_; }
    std::vector<Mirror>&& release() { return std::move(word_); }
    std::size_t size() const { return word_.size(); }
    const Mirror& operator[](std::size_t i) const { return word_[i]; }

    void cancel(std::size_t pos) { replace(Relation::Involution, pos, 2, {}); }

    void pencil(std::size_t pos, Mirror first, Mirror second) {
        replace(Relation::Pencil, pos, 2, {std::move(first), std::move(second)});
    }

    void split(std::size_t pos, Mirror first, Mirror second) {
        replace(Relation::PolarFrame, pos, 1, {std::move(first), std::move(second)});
    }

  private:
    void replace(Relation relation, std::size_t pos, std::size_t count, std::vector<Mirror> inserted) {
        auto begin = word_.begin() + static_cast<std::ptrdiff_t>(pos);
        auto end = begin + static_cast<std::ptrdiff_t>(count);
        if (trace_ != nullptr) {
            trace_->push_back({relation, pos, std::vector<Mirror>(begin, end), inserted});
        }
        begin = word_.erase(begin, end);
        word_.insert(begin, inserted.begin(), inserted.end());
    }

    std::vector<Mirror> word_;
    Trace<Mirror>* trace_;
};

/// Applies a single step. Throws DegenerateInput if the mirrors at the step's
/// position are not bit-identical to the recorded `removed` mirrors.
template <class Mirror>
void apply_step(std::vector<Mirror>& word, const RewriteStep<Mirror>& step) {
    const std::size_t count = step.removed.size();
    if (step.position + count > word.size()) {
        throw Error(ErrorKind::DegenerateInput, "rewrite step out of range");
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (!(word[step.position + i] == step.removed[i])) {
            throw Error(ErrorKind::DegenerateInput, "rewrite step does not match the word");
        }
    }
    auto begin = word.begin() + static_cast<std::ptrdiff_t>(step.position);
    begin = word.erase(begin, begin + static_cast<std::ptrdiff_t>(count));
    word.insert(begin, step.inserted.begin(), step.inserted.end());
}

/// Replays a whole trace on `word`.
template <class Mirror>
std::vector<Mirror> replay(std::vector<Mirror> word, const Trace<Mirror>& trace) {
    for (const auto& step : trace) {
        apply_step(word, step);
    }
    return word;
}

}  // namespace reflgroups
