/*
 * Copyright 2026 The semdecomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "semdecomp/bhattacharyya.hpp"
#include "semdecomp/categories.hpp"
#include "semdecomp/decomposition_report.hpp"
#include "semdecomp/embedding.hpp"
#include "semdecomp/error.hpp"
#include "semdecomp/interpretability.hpp"
#include "semdecomp/ks.hpp"
#include "semdecomp/preprocess.hpp"
#include "semdecomp/projection.hpp"
#include "semdecomp/random_embedding.hpp"
#include "semdecomp/retrieval.hpp"
#include "semdecomp/stats.hpp"
#include "semdecomp/strengths.hpp"
#include "semdecomp/study.hpp"
#include "semdecomp/subsample.hpp"
#include "semdecomp/vocabulary.hpp"
#include "semdecomp/weights.hpp"
