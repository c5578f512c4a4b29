#pragma once

#include <string_view>

namespace lnlfpc {

// The prelude shipped with the toolchain (also at corpus/prelude.lnl).
std::string_view preludeSource();

}  // namespace lnlfpc
