# SPDX-License-Identifier: GPL-3.0-or-later
from toeplitz_involution.cmdline import main

main()
