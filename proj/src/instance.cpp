#include "subauc/instance.hpp"

#include <string>

#include "subauc/errors.hpp"

namespace subauc {

void validate_instance(const Instance& instance) {
  if (instance.m < 0 || instance.m > ItemSet::kMaxItems) {
    throw InvalidArgument("instance has " + std::to_string(instance.m) + " items");
  }
  for (std::size_t i = 0; i < instance.bidders.size(); ++i) {
    if (instance.bidders[i].ground_size() != instance.m) {
      throw InvalidArgument("bidder " + std::to_string(i) + " is defined on " +
                            std::to_string(instance.bidders[i].ground_size()) + " items, instance has " +
                            std::to_string(instance.m));
    }
  }
}

}  // namespace subauc
