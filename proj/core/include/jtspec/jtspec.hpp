#pragma once

#include "jtspec/basis.hpp"
#include "jtspec/errors.hpp"
#include "jtspec/expm.hpp"
#include "jtspec/fock_ops.hpp"
#include "jtspec/models.hpp"
#include "jtspec/operator_matrix.hpp"
#include "jtspec/pseudoherm.hpp"
#include "jtspec/rwa.hpp"
#include "jtspec/spectrum.hpp"
#include "jtspec/transforms.hpp"
