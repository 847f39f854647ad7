#pragma once

#include "sgraph/dot_check.hpp"
#include "sgraph/graphicality.hpp"
#include "sgraph/io.hpp"
#include "sgraph/oracle.hpp"
#include "sgraph/realizer.hpp"
#include "sgraph/signed_graph.hpp"
