# Hackenbush workbench package
