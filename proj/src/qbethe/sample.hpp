#pragma once

#include "qbethe/errors.hpp"
#include "qbethe/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qbethe {

// What a sampled slot holds.
//  * Integer: a nonzero integer in [-10^6, 10^6].
//  * Ratio:   a quotient n1/n2 of two such integers with |value| != 1
//             (used for deformation parameters that must avoid roots of
//             unity degenerations).
enum class SlotKind {
    Integer,
    Ratio,
};

struct Slot {
    std::string name;
    SlotKind kind = SlotKind::Integer;
};

// A fully sampled point: slot name -> exact rational value.
using Assignment = std::map<std::string, Rat>;

// Convenience: slots named prefix1..prefixCount.
std::vector<Slot> indexedSlots(const std::string& prefix, int count,
                               SlotKind kind = SlotKind::Integer);

// Deterministic stream of sample points.
//
// The stream is a single mt19937_64 engine; every assignment consumes
// raw 64-bit outputs through unbiased rejection sampling, so the
// sequence of assignments depends only on (seed, slot list).  Values
// are guaranteed nonzero and pairwise distinct within one assignment;
// ratio slots additionally avoid absolute value one.  When a caller's
// evaluation hits a removable singularity it simply asks for the next
// assignment, which continues the same stream.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    Assignment next(const std::vector<Slot>& slots);

private:
    Rat drawInteger();
    Rat drawRatio();
    std::int64_t drawRaw();

    std::mt19937_64 engine_;
};

// Result of checking an identity at sampled points.
struct SampleCheck {
    bool pass = true;
    int samplesUsed = 0;
    int samplesReplaced = 0;
    std::vector<Assignment> points;
    std::optional<Assignment> counterexample;
};

// Evaluates `check` at `count` sampled assignments.  A DomainError
// thrown by `check` discards that assignment and draws a replacement
// from the same stream; after too many replacements the error is
// rethrown, because at that point the singularity is structural rather
// than accidental.  A `false` return is a counterexample and stops the
// run.
SampleCheck verifyEqualAtSamples(
    std::uint64_t seed, const std::vector<Slot>& slots, int count,
    const std::function<bool(const Assignment&)>& check);

} // namespace qbethe
