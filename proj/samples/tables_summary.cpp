// Reproduces every classification table and prints one line per table.
#include <iostream>

#include "nkt/golden.hpp"

int main() {
  using Status = nkt::ClassificationRow::Status;
  bool ok = true;
  for (int which = 2; which <= 7; ++which) {
    nkt::TableReport r = nkt::reproduce_table(which, nkt::golden_dir());
    std::cout << "table " << which << " (" << r.caption << "): " << r.rows.size() << " rows, "
              << r.count(Status::match) << " match, " << r.count(Status::allowed) << " allowed, "
              << r.count(Status::mismatch) << " mismatch\n";
    ok = ok && r.ok();
  }
  return ok ? 0 : 2;
}
