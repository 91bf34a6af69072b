#include "cckit/budget.hpp"

#include <cstdlib>
#include <string>

namespace cckit {

Budget Budget::defaults() {
    Budget b;
    if (const char* env = std::getenv("CCKIT_BUDGET")) {
        try {
            long long scale = std::stoll(env);
            if (scale > 0) {
                b.search_nodes = b.search_nodes / 100 * scale;
                b.group_elements = b.group_elements / 100 * scale;
            }
        } catch (...) {
            // unparsable override is ignored
        }
    }
    return b;
}

} // namespace cckit
