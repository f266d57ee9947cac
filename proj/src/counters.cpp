#include "pl/counters.hpp"

namespace pl {

PrimitiveCounters& counters() {
    thread_local PrimitiveCounters c;
    return c;
}

}  // namespace pl
