#pragma once

#include "probsat/io/diagnostic.hpp"
#include "probsat/io/dimacs.hpp"
#include "probsat/io/dnf_text.hpp"
#include "probsat/io/expression.hpp"
