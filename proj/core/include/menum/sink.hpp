#pragma once

#include <functional>

#include "menum/element_set.hpp"

namespace menum {

/// Solution consumer. Invoked synchronously on the enumerating thread; must
/// not re-enter the enumerator. Return false to stop the enumeration early.
using SolutionSink = std::function<bool(const ElementSet&)>;

}  // namespace menum
