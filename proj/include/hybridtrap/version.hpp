#pragma once

#define HYBRIDTRAP_VERSION "0.1.0"

namespace hybridtrap {

inline const char* version() { return HYBRIDTRAP_VERSION; }

}
