#pragma once

// Indexed storage with two access-cost classes. Fixed is a preallocated
// contiguous buffer; List is a singly linked chain walked from the head on
// every access. Each access charges steps to a counter so the cost model can
// be checked directly.

#include <cstddef>
#include <cstdint>
#include <forward_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "symband/error.hpp"

namespace symband {

enum class StorageKind { Fixed, List };

inline std::string_view to_string(StorageKind kind) noexcept { return kind == StorageKind::Fixed ? "fixed" : "list"; }

inline StorageKind parse_storage(std::string_view s) {
    if (s == "fixed") return StorageKind::Fixed;
    if (s == "list") return StorageKind::List;
    raise(ErrorKind::ParseError, "unknown storage kind '" + std::string(s) + "'");
}

template <class T>
class IndexedStore {
public:
    explicit IndexedStore(StorageKind kind = StorageKind::Fixed) : kind_(kind) {}

    IndexedStore(StorageKind kind, std::size_t length, const T& fill = T{}) : kind_(kind) {
        if (kind_ == StorageKind::Fixed) {
            fixed_.assign(length, fill);
        } else {
            list_.assign(length, fill);
            tail_ = length == 0 ? list_.before_begin() : std::next(list_.before_begin(), static_cast<std::ptrdiff_t>(length));
        }
        size_ = length;
    }

    template <class Range>
    static IndexedStore from_range(StorageKind kind, const Range& values) {
        IndexedStore s(kind);
        if (kind == StorageKind::Fixed) {
            s.fixed_.assign(std::begin(values), std::end(values));
            s.size_ = s.fixed_.size();
        } else {
            for (const auto& v : values) s.append(v);
        }
        return s;
    }

    // The list keeps an iterator to its last node, which a plain copy would leave dangling.
    IndexedStore(const IndexedStore& other)
        : kind_(other.kind_), fixed_(other.fixed_), list_(other.list_), size_(other.size_), steps_(other.steps_) {
        relink_tail();
    }
    IndexedStore& operator=(const IndexedStore& other) {
        if (this != &other) {
            kind_ = other.kind_;
            fixed_ = other.fixed_;
            list_ = other.list_;
            size_ = other.size_;
            steps_ = other.steps_;
            relink_tail();
        }
        return *this;
    }
    IndexedStore(IndexedStore&& other) noexcept = default;
    IndexedStore& operator=(IndexedStore&& other) noexcept = default;

    [[nodiscard]] StorageKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    /// Fixed charges one step; List charges i + 1.
    [[nodiscard]] const T& get(std::size_t i) const { return slot(i); }

    void set(std::size_t i, const T& v) { slot(i) = v; }
    void set(std::size_t i, T&& v) { slot(i) = std::move(v); }

    /// Growth is permitted only on List stores.
    void append(T v) {
        if (kind_ == StorageKind::Fixed) raise(ErrorKind::ShapeError, "fixed store cannot grow");
        tail_ = list_.insert_after(size_ == 0 ? list_.before_begin() : tail_, std::move(v));
        ++size_;
    }

    [[nodiscard]] std::uint64_t steps() const noexcept { return steps_; }
    void reset_steps() noexcept { steps_ = 0; }

    /// Uncharged copy-out, for serialization and tests only.
    [[nodiscard]] std::vector<T> snapshot() const {
        if (kind_ == StorageKind::Fixed) return fixed_;
        return std::vector<T>(list_.begin(), list_.end());
    }

private:
    T& slot(std::size_t i) const {
        if (i >= size_)
            raise(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " >= length " + std::to_string(size_));
        if (kind_ == StorageKind::Fixed) {
            steps_ += 1;
            return const_cast<T&>(fixed_[i]);
        }
        steps_ += i + 1;
        auto it = list_.begin();
        for (std::size_t k = 0; k < i; ++k) ++it;
        return const_cast<T&>(*it);
    }

    void relink_tail() {
        if (kind_ == StorageKind::List && size_ > 0)
            tail_ = std::next(list_.before_begin(), static_cast<std::ptrdiff_t>(size_));
    }

    StorageKind kind_;
    std::vector<T> fixed_;
    std::forward_list<T> list_;
    typename std::forward_list<T>::iterator tail_{};
    std::size_t size_ = 0;
    mutable std::uint64_t steps_ = 0;
};

}  // namespace symband
