#pragma once

#include "ross/ast.h"
#include "ross/diagnostics.h"

#include <string>

namespace ross {

// Parse one Star source buffer into a Document. Errors are reported to
// `diags` and parsing continues where possible; a document produced with
// errors present is incomplete and should not be compiled.
Document parse(const std::string& source, const std::string& file, Diagnostics& diags);

} // namespace ross
