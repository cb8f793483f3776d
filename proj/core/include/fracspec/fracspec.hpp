// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "fracspec/certify.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/inertia.hpp"
#include "fracspec/oracle.hpp"
#include "fracspec/pencil.hpp"
#include "fracspec/rational.hpp"
#include "fracspec/selfsim.hpp"
