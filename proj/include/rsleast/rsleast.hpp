/* Copyright 2026 The rsleast Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef RSLEAST_RSLEAST_HPP
#define RSLEAST_RSLEAST_HPP

#include "words.hpp"
#include "sequences.hpp"
#include "factors.hpp"
#include "desub.hpp"
#include "least_u.hpp"
#include "least_w.hpp"
#include "oracle.hpp"

#endif  // RSLEAST_RSLEAST_HPP
