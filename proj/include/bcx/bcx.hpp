#pragma once

#include "bcx/bicomplex.hpp"
#include "bcx/errors.hpp"
#include "bcx/format.hpp"
#include "bcx/io.hpp"
#include "bcx/linalg.hpp"
#include "bcx/linmap.hpp"
#include "bcx/matrix.hpp"
#include "bcx/vector.hpp"
