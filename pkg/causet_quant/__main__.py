# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

import sys

from causet_quant.cli import main

sys.exit(main())
