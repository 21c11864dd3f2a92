#include "liftcat/models/monoids.hpp"

namespace liftcat {

PcmTable boolean_table() {
  PcmTable t({"0", "1"}, 0);
  t.add_unit_sums();
  t.set_one(1);
  t.enable_mul(0);
  t.set_mul(1, 1, 1);
  return t;
}

}  // namespace liftcat
