#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bridgelab/error.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

using u64 = std::uint64_t;
using u8 = std::uint8_t;

// A dynamically-typed element of a finite space: either a leaf holding a
// short vector of machine words (residues, bits) or a tuple of sub-values.
// Every value carries the tag of the space it inhabits; schemes reject values
// with a foreign tag before doing any arithmetic.
class Value {
public:
    Value() : leaf_(true) {}

    static Value leaf(std::string tag, std::vector<u64> words) {
        Value v;
        v.tag_ = std::move(tag);
        v.words_ = std::move(words);
        v.leaf_ = true;
        return v;
    }
    static Value scalar(std::string tag, u64 w) { return leaf(std::move(tag), {w}); }
    static Value tuple(std::string tag, std::vector<Value> parts) {
        Value v;
        v.tag_ = std::move(tag);
        v.parts_ = std::move(parts);
        v.leaf_ = false;
        return v;
    }
    // The canonical empty value (empty bridge keys, hidden public keys).
    static Value none() { return leaf("none", {}); }

    bool is_leaf() const { return leaf_; }
    const std::string& tag() const { return tag_; }
    const std::vector<u64>& words() const { return words_; }
    const std::vector<Value>& parts() const { return parts_; }
    u64 word(std::size_t i) const { return words_.at(i); }
    const Value& part(std::size_t i) const { return parts_.at(i); }
    std::size_t size() const { return leaf_ ? words_.size() : parts_.size(); }

    bool operator==(const Value& o) const {
        return leaf_ == o.leaf_ && tag_ == o.tag_ && words_ == o.words_ && parts_ == o.parts_;
    }
    bool operator!=(const Value& o) const { return !(*this == o); }

    // Flattens all leaf words in order (tuple structure elided).
    std::vector<u64> flat_words() const {
        std::vector<u64> out;
        flatten_into(out);
        return out;
    }

    std::string to_string() const;

private:
    void flatten_into(std::vector<u64>& out) const {
        if (leaf_) {
            out.insert(out.end(), words_.begin(), words_.end());
        } else {
            for (const Value& p : parts_) p.flatten_into(out);
        }
    }

    std::string tag_;
    bool leaf_;
    std::vector<u64> words_;
    std::vector<Value> parts_;
};

inline void check_tag(const Value& v, const std::string& expected, const char* where) {
    require(v.tag() == expected, Errc::SpaceMismatch,
            std::string(where) + ": value tagged '" + v.tag() + "' where '" + expected +
                "' was expected");
}

// A finite set descriptor. Three modes:
//   - enumerable: full iteration allowed (cardinality + index -> value),
//   - samplable-only: uniform sampling but no enumeration,
//   - product: componentwise combination of other spaces.
// Enumeration order of a product is lexicographic with the first component
// most significant, which fixes the canonical witness-search order.
class Space {
public:
    Space() = default;

    static Space enumerable(std::string tag, u64 card, std::function<Value(u64)> at);
    static Space samplable(std::string tag, std::function<Value(Rng&)> sample);
    static Space product(std::string tag, std::vector<Space> components);

    // Convenience: {0, ..., q-1} as single-word leaves.
    static Space residues(std::string tag, u64 q);
    // Convenience: bit strings of the given width as one-word-per-bit leaves.
    static Space bits(std::string tag, std::size_t width);

    bool is_enumerable() const;
    u64 cardinality() const; // throws NonEnumerableSpace on samplable-only
    Value at(u64 index) const;
    Value sample(Rng& rng) const;

    const std::string& tag() const { return tag_; }
    const std::vector<Space>& components() const { return components_; }

private:
    enum class Kind { Enumerable, Samplable, Product };

    std::string tag_;
    Kind kind_ = Kind::Enumerable;
    u64 card_ = 0;
    std::function<Value(u64)> at_;
    std::function<Value(Rng&)> sample_;
    std::vector<Space> components_;
};

} // namespace bridgelab
