#ifndef CUR_INDEX_VECTOR_HPP
#define CUR_INDEX_VECTOR_HPP

#include <vector>

#include "cur/dense_matrix.hpp"

namespace cur {

// Ordered list of 1-based, non-repeating indices into a row or column domain.
class IndexVector {
public:
    IndexVector() : domain_size_(0) {}

    IndexVector(std::vector<Index> one_based_entries, Index domain_size);

    const std::vector<Index>& entries() const { return entries_; }
    Index domain_size() const { return domain_size_; }
    Index size() const { return static_cast<Index>(entries_.size()); }
    Index operator[](Index i) const { return entries_[static_cast<std::size_t>(i)]; }

    std::vector<Index> zero_based() const;

    bool operator==(const IndexVector& other) const {
        return entries_ == other.entries_ && domain_size_ == other.domain_size_;
    }

private:
    std::vector<Index> entries_;
    Index domain_size_;
};

} // namespace cur

#endif
