#ifndef HOPFACT_HOPFACT_HPP_
#define HOPFACT_HOPFACT_HPP_

#include "act.hpp"
#include "cli.hpp"
#include "congruence.hpp"
#include "deciders.hpp"
#include "endomorphisms.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "monoid.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "text_format.hpp"

#endif  // HOPFACT_HOPFACT_HPP_
