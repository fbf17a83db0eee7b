// Copyright 2026 The sptmqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPTMQC_SPTMQC_HPP
#define SPTMQC_SPTMQC_HPP

#include "sptmqc/errors.hpp"
#include "sptmqc/length.hpp"
#include "sptmqc/linalg.hpp"
#include "sptmqc/mps.hpp"
#include "sptmqc/mqc.hpp"
#include "sptmqc/orderparam.hpp"
#include "sptmqc/renorm.hpp"
#include "sptmqc/symmetry.hpp"
#include "sptmqc/toymodel.hpp"

#endif
