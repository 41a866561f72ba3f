from .commands import cli

cli(prog_name="treecut")
