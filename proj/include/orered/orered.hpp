#pragma once

#include "orered/error.hpp"
#include "orered/rational.hpp"
#include "orered/prime_field.hpp"
#include "orered/unipoly.hpp"
#include "orered/ratfun.hpp"
#include "orered/ore_context.hpp"
#include "orered/ore_poly.hpp"
#include "orered/ore_euclid.hpp"
#include "orered/format.hpp"
#include "orered/witness.hpp"
#include "orered/ore_witness.hpp"
#include "orered/finite/fp_matrix.hpp"
#include "orered/finite/finite_elem.hpp"
#include "orered/finite/testbed.hpp"
#include "orered/matrix/ore_mat.hpp"
#include "orered/matrix/trace.hpp"
#include "orered/matrix/hermite.hpp"
#include "orered/matrix/unimodular.hpp"
#include "orered/matrix/jacobson.hpp"
#include "orered/random.hpp"
#include "orered/io/parse.hpp"
#include "orered/io/formats.hpp"
#include "orered/io/cli.hpp"
