#pragma once

#include "ybe/error.hpp"
#include "ybe/scalar.hpp"
#include "ybe/matrix.hpp"
#include "ybe/space.hpp"
#include "ybe/table.hpp"
#include "ybe/report.hpp"
#include "ybe/core_algebra.hpp"
#include "ybe/tensor_calculus.hpp"
#include "ybe/ybe_checkers.hpp"
#include "ybe/operator_checkers.hpp"
#include "ybe/liftings.hpp"
#include "ybe/catalog.hpp"
#include "ybe/io.hpp"
#include "ybe/random.hpp"
#include "ybe/witnesses.hpp"
#include "ybe/campaigns.hpp"
