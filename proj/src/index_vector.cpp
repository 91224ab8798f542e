#include "cur/index_vector.hpp"

#include <string>
#include <unordered_set>

namespace cur {

IndexVector::IndexVector(std::vector<Index> one_based_entries, Index domain_size)
    : entries_(std::move(one_based_entries)), domain_size_(domain_size) {
    if (domain_size <= 0) throw ParameterError("IndexVector: domain size must be positive");
    std::unordered_set<Index> seen;
    for (Index e : entries_) {
        if (e < 1 || e > domain_size_)
            throw ParameterError("IndexVector: entry " + std::to_string(e) +
                                 " outside [1, " + std::to_string(domain_size_) + "]");
        if (!seen.insert(e).second)
            throw ParameterError("IndexVector: repeated entry " + std::to_string(e));
    }
}

std::vector<Index> IndexVector::zero_based() const {
    std::vector<Index> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[i] - 1;
    return out;
}

} // namespace cur
