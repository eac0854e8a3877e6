#pragma once

#define MOMENTKIT_VERSION "0.1.0"
