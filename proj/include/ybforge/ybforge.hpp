#ifndef YBFORGE_YBFORGE_HPP
#define YBFORGE_YBFORGE_HPP

// Everything except the command-line front end (ybforge/cli.hpp).

#include <ybforge/errors.hpp>
#include <ybforge/rational.hpp>
#include <ybforge/matrix.hpp>
#include <ybforge/paramgrid.hpp>
#include <ybforge/algebra.hpp>
#include <ybforge/wsubspace.hpp>
#include <ybforge/lie.hpp>
#include <ybforge/operator.hpp>
#include <ybforge/constructions.hpp>
#include <ybforge/registry.hpp>
#include <ybforge/io.hpp>
#include <ybforge/report.hpp>

#endif // YBFORGE_YBFORGE_HPP
