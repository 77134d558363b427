#ifndef SEQCIRC_POSITION_SET_H_
#define SEQCIRC_POSITION_SET_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace seqcirc {

// A set of expression positions. Position 0 is the initial position and
// letters occupy 1..m. Members are kept sorted and unique, so iteration and
// rendering are deterministic regardless of insertion order.
class PositionSet {
 public:
  using value_type = uint32_t;
  using const_iterator = std::vector<uint32_t>::const_iterator;

  PositionSet() = default;
  PositionSet(std::initializer_list<uint32_t> positions);

  static PositionSet FromUnsorted(std::vector<uint32_t> positions);

  void Insert(uint32_t position);
  bool Contains(uint32_t position) const;

  // In-place union.
  PositionSet& operator|=(const PositionSet& other);
  friend PositionSet operator|(PositionSet lhs, const PositionSet& rhs) {
    lhs |= rhs;
    return lhs;
  }

  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  uint32_t max() const { return members_.back(); }
  const std::vector<uint32_t>& members() const { return members_; }

  // "{0,2,3}"
  std::string ToString() const;

  friend bool operator==(const PositionSet&, const PositionSet&) = default;

 private:
  std::vector<uint32_t> members_;
};

}  // namespace seqcirc

#endif  // SEQCIRC_POSITION_SET_H_
