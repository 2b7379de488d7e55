#include "bridgelab/value.hpp"

#include <sstream>

namespace bridgelab {

std::string Value::to_string() const {
    std::ostringstream os;
    if (leaf_) {
        os << "(";
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (i) os << ",";
            os << words_[i];
        }
        os << ")";
    } else {
        os << "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i].to_string();
        }
        os << "]";
    }
    return os.str();
}

Space Space::enumerable(std::string tag, u64 card, std::function<Value(u64)> at) {
    require(card >= 1, Errc::InvalidParams, "enumerable space must be nonempty: " + tag);
    Space s;
    s.tag_ = std::move(tag);
    s.kind_ = Kind::Enumerable;
    s.card_ = card;
    s.at_ = std::move(at);
    return s;
}

Space Space::samplable(std::string tag, std::function<Value(Rng&)> sample) {
    Space s;
    s.tag_ = std::move(tag);
    s.kind_ = Kind::Samplable;
    s.sample_ = std::move(sample);
    return s;
}

Space Space::product(std::string tag, std::vector<Space> components) {
    require(!components.empty(), Errc::InvalidParams, "product of zero spaces");
    Space s;
    s.tag_ = std::move(tag);
    s.kind_ = Kind::Product;
    s.components_ = std::move(components);
    return s;
}

Space Space::residues(std::string tag, u64 q) {
    std::string t = tag;
    return enumerable(std::move(tag), q, [t](u64 i) { return Value::scalar(t, i); });
}

Space Space::bits(std::string tag, std::size_t width) {
    std::string t = tag;
    require(width < 63, Errc::InvalidParams, "bit space too wide to enumerate");
    return enumerable(std::move(tag), u64{1} << width, [t, width](u64 i) {
        std::vector<u64> w(width);
        for (std::size_t b = 0; b < width; ++b) w[b] = (i >> b) & 1u;
        return Value::leaf(t, std::move(w));
    });
}

bool Space::is_enumerable() const {
    if (kind_ == Kind::Samplable) return false;
    if (kind_ == Kind::Enumerable) return true;
    for (const Space& c : components_)
        if (!c.is_enumerable()) return false;
    return true;
}

u64 Space::cardinality() const {
    switch (kind_) {
        case Kind::Enumerable:
            return card_;
        case Kind::Samplable:
            fail(Errc::NonEnumerableSpace, "space '" + tag_ + "' is samplable-only");
        case Kind::Product: {
            u64 total = 1;
            for (const Space& c : components_) {
                u64 cc = c.cardinality();
                require(cc != 0 && total <= UINT64_MAX / cc, Errc::InvalidParams,
                        "product space cardinality overflow: " + tag_);
                total *= cc;
            }
            return total;
        }
    }
    return 0;
}

Value Space::at(u64 index) const {
    switch (kind_) {
        case Kind::Enumerable:
            require(index < card_, Errc::InvalidParams, "space index out of range: " + tag_);
            return at_(index);
        case Kind::Samplable:
            fail(Errc::NonEnumerableSpace, "space '" + tag_ + "' is samplable-only");
        case Kind::Product: {
            // Mixed-radix decode, first component most significant.
            std::vector<Value> parts(components_.size());
            for (std::size_t i = components_.size(); i-- > 0;) {
                u64 cc = components_[i].cardinality();
                parts[i] = components_[i].at(index % cc);
                index /= cc;
            }
            require(index == 0, Errc::InvalidParams, "space index out of range: " + tag_);
            return Value::tuple(tag_, std::move(parts));
        }
    }
    return Value::none();
}

Value Space::sample(Rng& rng) const {
    switch (kind_) {
        case Kind::Samplable:
            return sample_(rng);
        case Kind::Enumerable:
            return at_(rng.below(card_));
        case Kind::Product: {
            std::vector<Value> parts;
            parts.reserve(components_.size());
            for (const Space& c : components_) parts.push_back(c.sample(rng));
            return Value::tuple(tag_, std::move(parts));
        }
    }
    return Value::none();
}

} // namespace bridgelab
