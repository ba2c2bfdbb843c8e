# Schemas package

# Pydantic output documents
