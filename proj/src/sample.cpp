#include "qbethe/sample.hpp"

namespace qbethe {
namespace {

constexpr std::int64_t kRange = 1000000;
constexpr std::uint64_t kSpan = 2 * kRange + 1; // values in [-kRange, kRange]

// Largest multiple of kSpan representable in 64 bits; raw outputs at or
// above it are rejected so the fold to [0, kSpan) is unbiased.
constexpr std::uint64_t kLimit = UINT64_MAX - (UINT64_MAX % kSpan);

constexpr int kMaxReplacements = 1000;

} // namespace

std::vector<Slot> indexedSlots(const std::string& prefix, int count,
                               SlotKind kind) {
    if (count < 0) {
        throw InvalidArgError("negative slot count");
    }
    std::vector<Slot> slots;
    slots.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        slots.push_back(Slot{prefix + std::to_string(i), kind});
    }
    return slots;
}

std::int64_t SampleStream::drawRaw() {
    for (;;) {
        const std::uint64_t raw = engine_();
        if (raw >= kLimit) {
            continue;
        }
        const std::int64_t value =
            static_cast<std::int64_t>(raw % kSpan) - kRange;
        if (value != 0) {
            return value;
        }
    }
}

Rat SampleStream::drawInteger() { return Rat(drawRaw()); }

Rat SampleStream::drawRatio() {
    for (;;) {
        const std::int64_t a = drawRaw();
        const std::int64_t b = drawRaw();
        if (a == b || a == -b) { // |a/b| == 1
            continue;
        }
        return Rat(a, b);
    }
}

Assignment SampleStream::next(const std::vector<Slot>& slots) {
    Assignment out;
    for (const Slot& slot : slots) {
        for (;;) {
            Rat value =
                slot.kind == SlotKind::Ratio ? drawRatio() : drawInteger();
            bool clash = false;
            for (const auto& [name, prior] : out) {
                if (prior == value) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                out.emplace(slot.name, std::move(value));
                break;
            }
        }
    }
    return out;
}

SampleCheck verifyEqualAtSamples(
    std::uint64_t seed, const std::vector<Slot>& slots, int count,
    const std::function<bool(const Assignment&)>& check) {
    SampleStream stream(seed);
    SampleCheck result;
    while (result.samplesUsed < count) {
        Assignment point = stream.next(slots);
        bool ok = false;
        try {
            ok = check(point);
        } catch (const DomainError&) {
            ++result.samplesReplaced;
            if (result.samplesReplaced > kMaxReplacements) {
                throw;
            }
            continue;
        }
        ++result.samplesUsed;
        result.points.push_back(point);
        if (!ok) {
            result.pass = false;
            result.counterexample = std::move(point);
            break;
        }
    }
    return result;
}

} // namespace qbethe
