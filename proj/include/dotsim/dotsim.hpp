// Copyright 2026 The dotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dotsim/entanglement.hpp"
#include "dotsim/errors.hpp"
#include "dotsim/fock.hpp"
#include "dotsim/hubbard.hpp"
#include "dotsim/operators.hpp"
#include "dotsim/serialize.hpp"
#include "dotsim/teleport.hpp"
