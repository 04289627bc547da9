#pragma once

// Umbrella header: least closed sets from a base and a family of operations,
// stratified by order, with derivation descriptions and verification tools.

#include "recset/cli.hpp"
#include "recset/descriptions.hpp"
#include "recset/element.hpp"
#include "recset/engine.hpp"
#include "recset/errors.hpp"
#include "recset/instance.hpp"
#include "recset/instances.hpp"
#include "recset/langset.hpp"
#include "recset/operation.hpp"
#include "recset/text.hpp"
#include "recset/verify.hpp"
