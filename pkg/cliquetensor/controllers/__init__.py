# Command controllers - parse arguments and build documents
