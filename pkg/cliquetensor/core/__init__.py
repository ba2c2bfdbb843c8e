# Core functionality: config, logging, exceptions, dependencies
