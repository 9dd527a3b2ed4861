#pragma once

#include "seqsr/betti.hpp"
#include "seqsr/check_report.hpp"
#include "seqsr/complex.hpp"
#include "seqsr/complex_io.hpp"
#include "seqsr/decomposition.hpp"
#include "seqsr/errors.hpp"
#include "seqsr/face.hpp"
#include "seqsr/field.hpp"
#include "seqsr/generators.hpp"
#include "seqsr/graph.hpp"
#include "seqsr/graph_conditions.hpp"
#include "seqsr/homology.hpp"
#include "seqsr/ideal.hpp"
#include "seqsr/serre.hpp"
#include "seqsr/sparse_rank.hpp"
