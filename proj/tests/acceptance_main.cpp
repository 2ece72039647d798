// Runs every acceptance criterion at full scale and prints one line each.
#include <cstdio>

#include "superchar/acceptance.hpp"

int main() {
    auto results = superchar::run_acceptance(false);
    int failures = superchar::report_acceptance(results);
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
