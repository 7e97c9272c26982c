#ifndef ISOSPEC_ISOSPEC_HPP
#define ISOSPEC_ISOSPEC_HPP

#include "isospec/bounds.hpp"
#include "isospec/certificates.hpp"
#include "isospec/charpoly.hpp"
#include "isospec/conjugacy.hpp"
#include "isospec/cyclotomic.hpp"
#include "isospec/errors.hpp"
#include "isospec/finite_field.hpp"
#include "isospec/heisenberg.hpp"
#include "isospec/intmath.hpp"
#include "isospec/lie_type.hpp"
#include "isospec/schreier.hpp"
#include "isospec/subgroup.hpp"

#endif
