#include "boolrep/flat_family.hpp"

#include <algorithm>
#include <set>

#include "boolrep/error.hpp"

namespace boolrep {
namespace {

void sort_members(std::vector<Mask>& members) {
  std::sort(members.begin(), members.end(), subset_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

}  // namespace

FlatFamily::FlatFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  sort_members(members_);
  for (Mask m : members_)
    if (!is_subset(m, ground_.full())) fail(ErrorKind::ParseError, "member outside the ground set");
  if (!contains(ground_.full()))
    fail(ErrorKind::NotIntersectionClosed, "family does not contain the ground set");
  for (Mask a : members_)
    for (Mask b : members_)
      if (!contains(a & b))
        fail(ErrorKind::NotIntersectionClosed,
             ground_.format(a) + " and " + ground_.format(b) + " meet outside the family");
}

FlatFamily FlatFamily::closure_of(GroundSet ground, const std::vector<Mask>& generators) {
  std::set<Mask> closed{ground.full()};
  for (Mask g : generators) {
    std::vector<Mask> add;
    for (Mask x : closed) add.push_back(x & g);
    closed.insert(add.begin(), add.end());
  }
  return FlatFamily(std::move(ground), std::vector<Mask>(closed.begin(), closed.end()));
}

bool FlatFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m, subset_less);
}

Mask FlatFamily::closure(Mask x) const {
  Mask c = ground_.full();
  for (Mask m : members_)
    if (is_subset(x, m)) c &= m;
  return c;
}

bool family_less(const FlatFamily& a, const FlatFamily& b) {
  return std::lexicographical_compare(a.members().begin(), a.members().end(), b.members().begin(),
                                      b.members().end(), subset_less);
}

}  // namespace boolrep
