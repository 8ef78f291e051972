#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fcax/bitset.hpp"

namespace fcax {

// Index set over one side of a formal context. The tag keeps object sets and
// attribute sets from being mixed up; the derivation operators map between
// the two.
template <class Tag>
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe) {}
    explicit IndexSet(Bitset bits) : bits_(std::move(bits)) {}

    static IndexSet full(std::size_t universe) {
        return IndexSet(Bitset::full(universe));
    }
    static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> members) {
        IndexSet s(universe);
        for (auto i : members) s.add(i);
        return s;
    }

    std::size_t universe() const { return bits_.universe(); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(std::size_t i) const { return bits_.test(i); }

    IndexSet& add(std::size_t i) {
        bits_.set(i);
        return *this;
    }
    IndexSet& remove(std::size_t i) {
        bits_.reset(i);
        return *this;
    }

    bool subset_of(const IndexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const IndexSet& o) const { return bits_.intersects(o.bits_); }
    int lex_compare(const IndexSet& o) const { return bits_.lex_compare(o.bits_); }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) {
        a.bits_ |= b.bits_;
        return a;
    }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) {
        a.bits_ &= b.bits_;
        return a;
    }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) {
        a.bits_ -= b.bits_;
        return a;
    }

    bool operator==(const IndexSet&) const = default;

    std::vector<std::size_t> members() const { return bits_.members(); }
    template <class Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each(std::forward<Fn>(fn));
    }

    const Bitset& bits() const { return bits_; }
    Bitset& bits() { return bits_; }

private:
    Bitset bits_;
};

using ObjectSet = IndexSet<struct ObjectTag>;
using AttributeSet = IndexSet<struct AttributeTag>;

}  // namespace fcax
