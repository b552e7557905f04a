#ifndef LPA_LPA_HPP
#define LPA_LPA_HPP

#include "lpa/closures.hpp"
#include "lpa/element.hpp"
#include "lpa/errors.hpp"
#include "lpa/field.hpp"
#include "lpa/fixtures.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideals.hpp"
#include "lpa/parser.hpp"
#include "lpa/polynomial.hpp"

#endif
