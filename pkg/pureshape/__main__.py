# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

from pureshape.cli import main

main(prog_name='pureshape')
