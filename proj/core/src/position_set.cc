#include "seqcirc/position_set.h"

#include <algorithm>
#include <iterator>
#include <utility>

namespace seqcirc {

PositionSet::PositionSet(std::initializer_list<uint32_t> positions)
    : members_(positions) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

PositionSet PositionSet::FromUnsorted(std::vector<uint32_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  PositionSet set;
  set.members_ = std::move(positions);
  return set;
}

void PositionSet::Insert(uint32_t position) {
  auto it = std::lower_bound(members_.begin(), members_.end(), position);
  if (it == members_.end() || *it != position) members_.insert(it, position);
}

bool PositionSet::Contains(uint32_t position) const {
  return std::binary_search(members_.begin(), members_.end(), position);
}

PositionSet& PositionSet::operator|=(const PositionSet& other) {
  if (other.members_.empty()) return *this;
  if (members_.empty()) {
    members_ = other.members_;
    return *this;
  }
  std::vector<uint32_t> merged;
  merged.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  members_ = std::move(merged);
  return *this;
}

std::string PositionSet::ToString() const {
  std::string out = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  out += '}';
  return out;
}

}  // namespace seqcirc
