#pragma once

#include "arith.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "factored.hpp"
#include "groups.hpp"
#include "json_io.hpp"
#include "notation.hpp"
#include "partitions.hpp"
#include "psi.hpp"
#include "reports.hpp"
#include "symmetric.hpp"
#include "verify.hpp"
